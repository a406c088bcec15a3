#pragma once

// Adaptive Gauss-Kronrod quadrature and the Lorentz-weighted average
//
//   phi(rho) = (1/2) * int_{-T}^{T} ln|zeta(rho + i t)| dt / (1/4 + t^2)
//
// computed as a half-line integral over [0, T] (the integrand is even in t).

#include <cstddef>
#include <functional>

#include "magneton/specfun.hpp"

namespace magneton {

enum class TailMode {
  none,       // truncate at t_max and report nothing
  log_bound,  // report (never add) a bound on the part above t_max
};

struct AdaptiveOptions {
  double abs_tol = 1e-8;
  int max_depth = 40;
  // Panels whose midpoint value is below this are split until narrower than
  // min_singular_width before their error estimate is trusted.
  double singularity_floor = -30.0;
  double min_singular_width = 1e-6;
  std::size_t max_panels = std::size_t{1} << 20;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;             // sum of per-panel |Kronrod - Gauss|
  double tail_uncertainty = 0.0;  // only filled by TailMode::log_bound
  std::size_t panels = 0;
};

using Integrand = std::function<double(double)>;

// int_a^b f by globally adaptive 7/15-point Gauss-Kronrod bisection. The
// worst panel is split until the summed error estimate is <= abs_tol. The
// final sum runs over panels in order of their left endpoint, so the result
// does not depend on the refinement history.
// Throws ConvergenceError if the tolerance cannot be met within max_depth
// bisections or max_panels panels, DomainError for a bad interval.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    const AdaptiveOptions& opts = {});

// int_a^inf f, mapped to int_0^(1/a) f(1/u) / u^2 du. Requires a > 0; f must
// decay faster than 1/t.
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const AdaptiveOptions& opts = {});

struct QuadratureConfig {
  double t_max = 50.0;
  double abs_tol = 1e-8;
  int max_depth = 40;
  double singularity_floor = -30.0;
  TailMode tail_mode = TailMode::none;
  // constant in ln|zeta(s)| <= tail_constant + kappa(rho) ln|s| used by log_bound
  double tail_constant = 1.0;
  ZetaConfig zeta{};
};

// Validates the config; throws DomainError on t_max <= 0, abs_tol <= 0,
// max_depth < 1, or t_max beyond the zeta window.
void validate(const QuadratureConfig& cfg);

// phi(rho) over [0, t_max], with the error estimate and panel count.
QuadratureResult integrate_phi(double rho, const QuadratureConfig& cfg = {});

// Same average computed over the full line [-t_max, t_max] without using
// evenness. Diagnostic only; roughly twice the work.
QuadratureResult integrate_phi_full_line(double rho, const QuadratureConfig& cfg = {});

double phi_numeric(double rho, const QuadratureConfig& cfg = {});

// Closed form of int_0^inf ln(beta^2 + mu t^2) / (alpha + t^2) dt
//   = pi / sqrt(alpha) * ln(sqrt(mu alpha) + beta).
// Requires alpha > 0, beta >= 0, mu > 0.
double lorentz_log_integral(double alpha, double beta, double mu);

}  // namespace magneton
