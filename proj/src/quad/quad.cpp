#include "magneton/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "magneton/errors.hpp"

namespace magneton {
namespace {

// 7-point Gauss / 15-point Kronrod on [-1, 1]. Nodes listed for x >= 0,
// Kronrod nodes at odd index coincide with the Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,  0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,  0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,  0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,  0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;  // may be +inf to force a split
  int depth;
};

struct WorseFirst {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel evaluate_panel(const Integrand& f, double a, double b, int depth,
                     const AdaptiveOptions& opts) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_center = f(center);
  double kronrod = kKronrodWeights[7] * f_center;
  double gauss = kGaussWeights[3] * f_center;
  bool finite = std::isfinite(f_center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    finite = finite && std::isfinite(pair);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  Panel p{a, b, kronrod * half, std::abs((kronrod - gauss) * half), depth};
  const bool suspicious = f_center < opts.singularity_floor && (b - a) >= opts.min_singular_width;
  if (!finite || suspicious) p.error = std::numeric_limits<double>::infinity();
  return p;
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    const AdaptiveOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError(fmt::format("integrate_adaptive: invalid interval [{}, {}]", a, b));
  }
  if (!(opts.abs_tol > 0.0) || opts.max_depth < 1) {
    throw DomainError("integrate_adaptive: abs_tol must be > 0 and max_depth >= 1");
  }

  std::priority_queue<Panel, std::vector<Panel>, WorseFirst> active;
  std::vector<Panel> frozen;  // at max depth; cannot be refined further
  active.push(evaluate_panel(f, a, b, 0, opts));

  auto total_error = [&]() {
    long double sum = 0.0L;
    for (const auto& p : frozen) sum += p.error;
    auto copy = active;
    while (!copy.empty()) {
      sum += copy.top().error;
      copy.pop();
    }
    return static_cast<double>(sum);
  };

  long double running = active.top().error;
  std::size_t since_resync = 0;
  while (!active.empty()) {
    if (!std::isfinite(static_cast<double>(running)) || since_resync >= 256) {
      running = total_error();
      since_resync = 0;
    }
    if (running <= opts.abs_tol) {
      running = total_error();
      since_resync = 0;
      if (running <= opts.abs_tol) break;
    }
    Panel worst = active.top();
    active.pop();
    if (worst.depth >= opts.max_depth) {
      frozen.push_back(worst);
      continue;
    }
    if (active.size() + frozen.size() + 2 > opts.max_panels) {
      throw ConvergenceError(fmt::format(
          "integrate_adaptive: panel budget {} exhausted on [{}, {}] (error {:.3e})",
          opts.max_panels, a, b, total_error()));
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid, worst.depth + 1, opts);
    Panel right = evaluate_panel(f, mid, worst.b, worst.depth + 1, opts);
    running += static_cast<long double>(left.error) + right.error - worst.error;
    ++since_resync;
    active.push(left);
    active.push(right);
  }

  std::vector<Panel> all = std::move(frozen);
  while (!active.empty()) {
    all.push_back(active.top());
    active.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  long double value = 0.0L, error = 0.0L;
  for (const auto& p : all) {
    value += p.value;
    error += p.error;
  }
  QuadratureResult r{static_cast<double>(value), static_cast<double>(error), 0.0, all.size()};
  if (!(r.error <= opts.abs_tol)) {
    throw ConvergenceError(fmt::format(
        "integrate_adaptive: max depth {} reached on [{}, {}] with error {:.3e} > {:.3e}",
        opts.max_depth, a, b, r.error, opts.abs_tol));
  }
  return r;
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a, const AdaptiveOptions& opts) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("integrate_to_infinity: lower limit must be finite and > 0");
  }
  const Integrand mapped = [&f](double u) {
    const double t = 1.0 / u;
    return f(t) / (u * u);
  };
  return integrate_adaptive(mapped, 0.0, 1.0 / a, opts);
}

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) {
    throw DomainError("quadrature: t_max must be finite and > 0");
  }
  if (!(cfg.abs_tol > 0.0)) throw DomainError("quadrature: abs_tol must be > 0");
  if (cfg.max_depth < 1) throw DomainError("quadrature: max_depth must be >= 1");
  if (cfg.t_max > cfg.zeta.max_height) {
    throw WindowError(fmt::format("quadrature: t_max {} above the zeta window {}", cfg.t_max,
                                  cfg.zeta.max_height));
  }
}

namespace {

AdaptiveOptions options_from(const QuadratureConfig& cfg) {
  AdaptiveOptions o;
  o.abs_tol = cfg.abs_tol;
  o.max_depth = cfg.max_depth;
  o.singularity_floor = cfg.singularity_floor;
  return o;
}

// ln|zeta(rho + i t)| <= c + kappa ln|s| with kappa = max(1, 1/2 - rho), the
// convexity growth exponent rounded up. Integrated against 1/t^2 above T.
double log_bound_tail(double rho, const QuadratureConfig& cfg) {
  const double kappa = std::max(1.0, 0.5 - rho);
  const double t = cfg.t_max;
  return (cfg.tail_constant + kappa * (std::log(t) + 1.0)) / t +
         kappa * std::abs(rho) / (2.0 * t * t);
}

}  // namespace

QuadratureResult integrate_phi(double rho, const QuadratureConfig& cfg) {
  if (!std::isfinite(rho)) throw DomainError("phi_numeric: rho must be finite");
  validate(cfg);
  const ZetaConfig zc = cfg.zeta;
  const Integrand integrand = [rho, zc](double t) {
    return log_abs_zeta({rho, t}, zc) / (0.25 + t * t);
  };
  QuadratureResult r = integrate_adaptive(integrand, 0.0, cfg.t_max, options_from(cfg));
  if (cfg.tail_mode == TailMode::log_bound) r.tail_uncertainty = log_bound_tail(rho, cfg);
  return r;
}

QuadratureResult integrate_phi_full_line(double rho, const QuadratureConfig& cfg) {
  if (!std::isfinite(rho)) throw DomainError("phi_numeric: rho must be finite");
  validate(cfg);
  const ZetaConfig zc = cfg.zeta;
  const Integrand integrand = [rho, zc](double t) {
    return log_abs_zeta({rho, t}, zc) / (0.25 + t * t);
  };
  AdaptiveOptions o = options_from(cfg);
  o.abs_tol *= 2.0;
  QuadratureResult r = integrate_adaptive(integrand, -cfg.t_max, cfg.t_max, o);
  r.value *= 0.5;
  r.error *= 0.5;
  if (cfg.tail_mode == TailMode::log_bound) r.tail_uncertainty = log_bound_tail(rho, cfg);
  return r;
}

double phi_numeric(double rho, const QuadratureConfig& cfg) {
  return integrate_phi(rho, cfg).value;
}

double lorentz_log_integral(double alpha, double beta, double mu) {
  if (!(alpha > 0.0) || !(beta >= 0.0) || !(mu > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta) || !std::isfinite(mu)) {
    throw DomainError("lorentz_log_integral: requires alpha > 0, beta >= 0, mu > 0");
  }
  return constants::pi / std::sqrt(alpha) * std::log(std::sqrt(mu * alpha) + beta);
}

}  // namespace magneton
