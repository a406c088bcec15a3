#include "magneton/taylor.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <span>
#include <thread>

#include <fmt/core.h>

#include "magneton/errors.hpp"
#include "magneton/potential.hpp"
#include "magneton/roots.hpp"

namespace magneton {
namespace {

using constants::euler_gamma_l;
using constants::ln_pi_l;

constexpr int kMaxOrder = 20;
constexpr long double kCenter = 1.5L;
constexpr std::size_t kPrimeChunk = 4096;
// Stop the k loop for a prime once the remaining k tail is this small
// relative to the k = 1 term, for every order.
constexpr long double kNegligibleTail = 1e-24L;

long double pairwise_sum(std::span<const long double> v) {
  if (v.size() <= 4) {
    long double s = 0.0L;
    for (auto x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// x^n for small integer n (std::pow on long double is slow).
long double ipow(long double x, int n) {
  if (n < 0) return 1.0L / ipow(x, -n);
  long double r = 1.0L;
  for (; n > 0; n >>= 1, x *= x) {
    if (n & 1) r *= x;
  }
  return r;
}

long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// int_{ln L}^inf u^n e^(-a u) du = Gamma(n + 1, a ln L) / a^(n + 1).
long double log_power_integral(int n, long double a, long double log_l) {
  const long double z = a * log_l;
  long double series = 0.0L, term = 1.0L;
  for (int j = 0; j <= n; ++j) {
    series += term;
    term *= z / (j + 1);
  }
  return factorial(n) * std::exp(-z) * series / std::pow(a, n + 1);
}

// sum_{m > L} (ln m)^n m^(-s) over all integers, s > 1: integral plus the
// largest term of the unimodal summand.
long double integer_log_tail(int n, long double s, long double limit) {
  const long double log_l = std::log(limit);
  const long double peak = n / s;  // maximiser of u^n e^(-s u)
  const long double u = std::max(log_l, peak);
  const long double max_term = std::pow(u, n) * std::exp(-s * u);
  return log_power_integral(n, s - 1.0L, log_l) + max_term;
}

struct PrimeSums {
  std::vector<long double> value;  // sum over listed primes, k <= k cut
  std::vector<long double> k_tail;
};

PrimeSums prime_chunk(std::span<const std::uint32_t> primes, int order, int k_max) {
  PrimeSums out{std::vector<long double>(order + 1, 0.0L), std::vector<long double>(order + 1, 0.0L)};
  for (const std::uint32_t p : primes) {
    const long double lp = std::log(static_cast<long double>(p));
    const long double q = std::exp(-kCenter * lp);
    long double qk = q;
    int k = 1;
    for (;; ++k) {
      // (-k ln p)^n p^(-3k/2) / k
      long double v = qk / k;
      for (int n = 0; n <= order; ++n) {
        out.value[n] += v;
        v *= -k * lp;
      }
      qk *= q;
      if (k >= k_max) break;
      // Remaining k tail, geometric in the ratio of consecutive terms. Relative
      // to the k = 1 term it is largest at the top order, so only that is checked.
      const int n = std::max(order, 1);
      const long double ratio = ipow((k + 2.0L) / (k + 1.0L), n - 1) * q;
      const long double relative = ipow(k + 1.0L, n - 1) * (qk / q) / (1.0L - ratio);
      if (ratio < 1.0L && relative <= kNegligibleTail) break;
    }
    // Tail of the terms beyond the last k that was summed.
    const long double next = k + 1.0L;
    const long double step = (next + 1.0L) / next;
    long double ratio = q / step;          // step^(n - 1) q
    long double lead = qk / next;          // next^(n - 1) lp^n q^next
    for (int n = 0; n <= order; ++n) {
      out.k_tail[n] += ratio < 1.0L ? lead / (1.0L - ratio)
                                    : std::numeric_limits<long double>::infinity();
      ratio *= step;
      lead *= next * lp;
    }
  }
  return out;
}

PrimeSums prime_part(const PrimeTable& table, int order, int k_max, unsigned threads) {
  const auto primes = table.primes();
  const std::size_t n_chunks = (primes.size() + kPrimeChunk - 1) / kPrimeChunk;
  std::vector<PrimeSums> partial(n_chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < n_chunks; i = next++) {
      const std::size_t begin = i * kPrimeChunk;
      const std::size_t len = std::min(kPrimeChunk, primes.size() - begin);
      partial[i] = prime_chunk(primes.subspan(begin, len), order, k_max);
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, n_chunks));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  // Fixed reduction order, independent of scheduling.
  PrimeSums total{std::vector<long double>(order + 1, 0.0L), std::vector<long double>(order + 1, 0.0L)};
  for (const auto& part : partial) {
    for (int n = 0; n <= order; ++n) {
      total.value[n] += part.value[n];
      total.k_tail[n] += part.k_tail[n];
    }
  }
  return total;
}

// Bound on what primes above the table limit contribute to the n-th
// derivative, k = 1 and k >= 2 separately.
long double prime_limit_tail(int n, long double limit) {
  const long double k1 = integer_log_tail(n, kCenter, limit);
  const long double ratio = std::pow(1.5L, n - 1) * std::pow(limit, -kCenter);
  if (!(ratio < 1.0L)) return std::numeric_limits<long double>::infinity();
  const long double k2 =
      std::pow(2.0L, n - 1) / (1.0L - ratio) * integer_log_tail(n, 2.0L * kCenter, limit);
  return k1 + k2;
}

// Derivatives at 3/2 of ln(x - 1) + ln x + ln Gamma(x/2) - (x/2) ln pi, term by term.
std::vector<long double> elementary_parts(int order) {
  std::vector<long double> out(order + 1);
  out[0] = std::log(0.5L) + std::log(1.5L) + log_gamma(0.75L) - 0.75L * ln_pi_l;
  for (int n = 1; n <= order; ++n) {
    const long double sign = (n % 2 == 1) ? 1.0L : -1.0L;
    const long double fact = factorial(n - 1);
    out[n] = sign * fact * std::pow(2.0L, n) + sign * fact * std::pow(2.0L / 3.0L, n) +
             polygamma(n - 1, 0.75L) / std::pow(2.0L, n);
    if (n == 1) out[n] -= ln_pi_l / 2.0L;
  }
  return out;
}

// Same function assembled without cancellation: ln[(x - 1) zeta(x)] from the
// regularised jet, and ln x + ln Gamma(x/2) = ln(2 Gamma(x/2 + 1)).
std::vector<long double> analytic_coefficients(int order) {
  const auto g = regularized_zeta_jet(kCenter, order);
  auto out = log_jet(g);
  out[0] += std::log(2.0L) + log_gamma(1.75L) - 0.75L * ln_pi_l;
  for (int n = 1; n <= order; ++n) {
    out[n] += polygamma(n - 1, 1.75L) / std::pow(2.0L, n);
    if (n == 1) out[n] -= ln_pi_l / 2.0L;
  }
  return out;
}

long double log_zeta_real(long double x) {
  if (x >= 20.0L) {
    long double eps = 0.0L;
    for (int n = 60; n >= 2; --n) eps += std::pow(static_cast<long double>(n), -x);
    return std::log1p(eps);
  }
  return std::log(zeta_jet(x, 0)[0]);
}

}  // namespace

double TaylorCoefficients::tail_bound() const {
  if (source == ZetaPartSource::analytic) return 0.0;
  double worst = 0.0;
  for (double b : prime_tail_bound) worst = std::max(worst, b);
  return worst;
}

TaylorCoefficients compute_coefficients(int order, const PrimeTable& table, int k_max,
                                        const TaylorOptions& options) {
  if (order < 0 || order > kMaxOrder) {
    throw DomainError(fmt::format("compute_coefficients: order must be in [0, {}]", kMaxOrder));
  }
  if (table.empty()) throw DomainError("compute_coefficients: empty prime table");
  if (k_max < 1) throw DomainError("compute_coefficients: k_max must be >= 1");

  TaylorCoefficients tc;
  tc.order = order;
  tc.source = options.source;
  tc.prime_limit = table.limit();
  tc.k_max = k_max;
  tc.analytic_c = analytic_coefficients(order);

  const auto sums = prime_part(table, order, k_max, options.threads);
  const auto rest = elementary_parts(order);
  tc.prime_c.resize(order + 1);
  tc.prime_tail_bound.resize(order + 1);
  for (int n = 0; n <= order; ++n) {
    tc.prime_c[n] = sums.value[n] + rest[n];
    const long double bound =
        sums.k_tail[n] + prime_limit_tail(n, static_cast<long double>(table.limit()));
    tc.prime_tail_bound[n] = static_cast<double>(bound);
  }
  tc.c = options.source == ZetaPartSource::analytic ? tc.analytic_c : tc.prime_c;

  if (options.tail_ceiling && tc.tail_bound() > *options.tail_ceiling) {
    throw BudgetError(fmt::format(
        "compute_coefficients: prime tail bound {:.3e} exceeds the ceiling {:.3e} (raise the "
        "prime limit, lower the order, or use the analytic zeta part)",
        tc.tail_bound(), *options.tail_ceiling));
  }
  return tc;
}

RearrangedExpansion rearranged_at_one(const TaylorCoefficients& coeffs, int terms) {
  if (terms < 0 || terms > coeffs.order) {
    throw DomainError(fmt::format("rearranged_at_one: terms must be in [0, {}]", coeffs.order));
  }
  // (x - 3/2)^n = sum_k C(n, k) (x - 1)^k (-1/2)^(n - k)
  std::vector<long double> value, slope, curvature;
  long double half_pow = 1.0L;  // (-1/2)^n
  long double inv_fact = 1.0L;  // 1/n!
  for (int n = 0; n <= terms; ++n) {
    if (n > 0) {
      half_pow *= -0.5L;
      inv_fact /= n;
    }
    const long double c = coeffs.c[n];
    value.push_back(c * half_pow * inv_fact);
    if (n >= 1) slope.push_back(c * half_pow / -0.5L * n * inv_fact);
    if (n >= 2) curvature.push_back(c * half_pow / 0.25L * 0.5L * n * (n - 1) * inv_fact);
  }
  return {pairwise_sum(value), pairwise_sum(slope), pairwise_sum(curvature)};
}

PartialSums partial_sums(const TaylorCoefficients& coeffs, double x) {
  if (!std::isfinite(x)) throw DomainError("partial_sums: x must be finite");
  PartialSums out{x, {}, std::abs(x - 1.5) > 0.5};
  const long double h = static_cast<long double>(x) - kCenter;
  long double term_scale = 1.0L;
  long double acc = 0.0L;
  for (int n = 0; n <= coeffs.order; ++n) {
    if (n > 0) term_scale *= h / n;
    acc += coeffs.c[n] * term_scale;
    out.sums.push_back(acc);
  }
  return out;
}

LiEstimate li_estimate_vs_exact(const TaylorCoefficients& coeffs) {
  if (coeffs.order < 2) throw DomainError("li_estimate_vs_exact: needs order >= 2");
  const double estimate = static_cast<double>(rearranged_at_one(coeffs, coeffs.order).slope);
  const long double exact = 1.0L + 0.5L * euler_gamma_l - 0.5L * std::log(4.0L * constants::pi_l);
  return {estimate, static_cast<double>(exact),
          static_cast<double>(rearranged_at_one(coeffs, coeffs.order).slope - exact)};
}

HiddenPartner hidden_symmetry_partner(double rho) {
  if (!(rho > 0.5 && rho < 1.0)) {
    throw DomainError("hidden_symmetry_partner: requires 1/2 < rho < 1");
  }
  const double target = phi_closed(rho);
  const auto f = [target](double r) {
    return static_cast<double>(constants::pi_l * log_zeta_real(r + 0.5L)) - target;
  };
  double hi = 2.0;
  while (f(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e4) throw BracketError("hidden_symmetry_partner: phi(rho) too close to zero");
  }
  const auto root = find_root(f, 1.0, hi, 1e-12);
  const double approximation =
      -std::log((1.0 + constants::euler_gamma) * (rho - 0.5)) / std::log(2.0);
  return {root.root, approximation};
}

}  // namespace magneton
