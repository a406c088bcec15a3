#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bernoulli.hpp"
#include "magneton/errors.hpp"
#include "magneton/specfun.hpp"

namespace magneton {
namespace {

using detail::kEulerMaclaurinWeights;

constexpr int kCorrectionTerms = static_cast<int>(kEulerMaclaurinWeights.size());
constexpr int kJetTerms = 64;

void require_finite(Complex s, const char* what) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

int term_count(double height, const ZetaConfig& cfg) {
  const double scaled = std::ceil(cfg.terms_per_unit_height * std::abs(height));
  return std::max(cfg.min_terms, static_cast<int>(scaled));
}

// n^-s with the conjugation symmetry preserved bit for bit.
Complex inverse_power(double log_n, Complex s) {
  const double magnitude = std::exp(-s.real() * log_n);
  const double angle = s.imag() * log_n;
  return {magnitude * std::cos(angle), -magnitude * std::sin(angle)};
}

// zeta(s) = regular + pole_numerator / (s - 1).
struct EulerMaclaurinParts {
  Complex regular;
  Complex pole_numerator;
};

EulerMaclaurinParts euler_maclaurin(Complex s, int n_terms) {
  Complex head{0.0, 0.0};
  for (int n = n_terms - 1; n >= 1; --n) {
    head += inverse_power(std::log(static_cast<double>(n)), s);
  }
  const double big_n = static_cast<double>(n_terms);
  const double log_n = std::log(big_n);
  const Complex n_pow = inverse_power(log_n, s);  // N^-s

  Complex corrections{0.0, 0.0};
  Complex rising = s;                    // s (s+1) ... (s+2k-2)
  Complex n_factor = n_pow / big_n;      // N^(-s-2k+1)
  const double inv_n2 = 1.0 / (big_n * big_n);
  for (int k = 1; k <= kCorrectionTerms; ++k) {
    corrections += static_cast<double>(kEulerMaclaurinWeights[k - 1]) * rising * n_factor;
    const double a = 2.0 * k - 1.0;
    rising *= (s + a) * (s + (a + 1.0));
    n_factor *= inv_n2;
  }
  return {head + 0.5 * n_pow + corrections, n_pow * big_n};
}

// 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s), the factor in zeta(s) = chi(s) zeta(1 - s).
Complex reflection_factor(Complex s) {
  const Complex log_part =
      s * constants::ln2 + (s - 1.0) * constants::ln_pi + log_gamma(1.0 - s);
  return std::exp(log_part) * std::sin(0.5 * constants::pi * s);
}

Complex zeta_direct(Complex s, const ZetaConfig& cfg) {
  const auto parts = euler_maclaurin(s, term_count(s.imag(), cfg));
  return parts.regular + parts.pole_numerator / (s - 1.0);
}

void check_window(Complex s, const ZetaConfig& cfg, const char* what) {
  require_finite(s, what);
  if (std::abs(s.imag()) > cfg.max_height) {
    throw WindowError(std::string(what) + ": |Im s| = " + std::to_string(std::abs(s.imag())) +
                      " exceeds supported height " + std::to_string(cfg.max_height));
  }
}

}  // namespace

Complex zeta(Complex s, const ZetaConfig& cfg) {
  check_window(s, cfg, "zeta");
  if (s == Complex{1.0, 0.0}) throw PoleError("zeta: pole at s = 1");
  if (s.real() < 0.0) {
    return reflection_factor(s) * zeta_direct(1.0 - s, cfg);
  }
  return zeta_direct(s, cfg);
}

Complex zeta_times_s_minus_one(Complex s, const ZetaConfig& cfg) {
  check_window(s, cfg, "zeta_times_s_minus_one");
  if (s.real() < 0.0) {
    return (s - 1.0) * reflection_factor(s) * zeta_direct(1.0 - s, cfg);
  }
  const auto parts = euler_maclaurin(s, term_count(s.imag(), cfg));
  return (s - 1.0) * parts.regular + parts.pole_numerator;
}

double log_abs_zeta(Complex s, const ZetaConfig& cfg) {
  const double magnitude = std::abs(zeta(s, cfg));
  if (magnitude < kZetaUnderflowFloor) return -std::numeric_limits<double>::infinity();
  return std::log(magnitude);
}

// ---------------------------------------------------------------------------
// Real-axis jets

namespace {

// Derivatives of the regular Euler-Maclaurin part A(x), m = 0..order, where
// zeta(x) = A(x) + N^(1-x) / (x - 1).
std::vector<long double> regular_part_jet(long double x, int order) {
  std::vector<long double> jet(order + 1, 0.0L);

  // Head sum, accumulated from the small terms up.
  for (int n = kJetTerms - 1; n >= 2; --n) {
    const long double log_n = std::log(static_cast<long double>(n));
    const long double base = std::exp(-x * log_n);
    long double factor = base;
    for (int m = 0; m <= order; ++m) {
      jet[m] += factor;
      factor *= -log_n;
    }
  }
  jet[0] += 1.0L;  // n = 1

  const long double big_n = kJetTerms;
  const long double log_n = std::log(big_n);
  const long double n_pow = std::exp(-x * log_n);  // N^-x
  {
    long double factor = 0.5L * n_pow;
    for (int m = 0; m <= order; ++m) {
      jet[m] += factor;
      factor *= -log_n;
    }
  }

  // Correction k: w_k P_k(x) N^(-x-2k+1), P_k(x) = x (x+1) ... (x+2k-2).
  // taylor[j] = P_k^(j)(x) / j!, built incrementally in k.
  std::vector<long double> taylor{x, 1.0L};
  auto multiply_linear = [&taylor](long double c) {
    // taylor(h) *= (c + h)
    taylor.push_back(0.0L);
    for (std::size_t j = taylor.size() - 1; j > 0; --j) {
      taylor[j] = taylor[j] * c + taylor[j - 1];
    }
    taylor[0] *= c;
  };

  // Binomial coefficients row by row up to `order`.
  std::vector<std::vector<long double>> binom(order + 1);
  for (int m = 0; m <= order; ++m) {
    binom[m].assign(m + 1, 1.0L);
    for (int j = 1; j < m; ++j) binom[m][j] = binom[m - 1][j - 1] + binom[m - 1][j];
  }
  std::vector<long double> factorial(order + 1, 1.0L);
  for (int j = 1; j <= order; ++j) factorial[j] = factorial[j - 1] * j;

  std::vector<long double> log_pow(order + 1, 1.0L);  // (-ln N)^i
  for (int i = 1; i <= order; ++i) log_pow[i] = log_pow[i - 1] * -log_n;

  long double n_factor = n_pow / big_n;
  for (int k = 1; k <= kCorrectionTerms; ++k) {
    const long double w = detail::kEulerMaclaurinWeights[k - 1] * n_factor;
    const int degree = static_cast<int>(taylor.size()) - 1;
    for (int m = 0; m <= order; ++m) {
      long double acc = 0.0L;
      for (int j = 0; j <= std::min(m, degree); ++j) {
        acc += binom[m][j] * taylor[j] * factorial[j] * log_pow[m - j];
      }
      jet[m] += w * acc;
    }
    multiply_linear(x + (2 * k - 1));
    multiply_linear(x + 2 * k);
    n_factor /= big_n * big_n;
  }
  return jet;
}

void require_positive(long double x, const char* what) {
  if (!std::isfinite(x) || x <= 0.0L) {
    throw DomainError(std::string(what) + ": requires a finite x > 0");
  }
}

}  // namespace

std::vector<long double> regularized_zeta_jet(long double x, int order) {
  require_positive(x, "regularized_zeta_jet");
  if (order < 0) throw DomainError("regularized_zeta_jet: negative order");
  const auto a = regular_part_jet(x, order);
  const long double log_n = std::log(static_cast<long double>(kJetTerms));
  const long double n_pow = std::exp((1.0L - x) * log_n);  // N^(1-x)
  std::vector<long double> g(order + 1);
  long double log_factor = 1.0L;
  for (int m = 0; m <= order; ++m) {
    g[m] = (x - 1.0L) * a[m] + n_pow * log_factor;
    if (m > 0) g[m] += m * a[m - 1];
    log_factor *= -log_n;
  }
  return g;
}

std::vector<long double> zeta_jet(long double x, int order) {
  require_positive(x, "zeta_jet");
  if (x == 1.0L) throw PoleError("zeta_jet: pole at x = 1");
  if (order < 0) throw DomainError("zeta_jet: negative order");
  auto jet = regular_part_jet(x, order);
  const long double log_n = std::log(static_cast<long double>(kJetTerms));
  const long double n_pow = std::exp((1.0L - x) * log_n);
  const long double inv = 1.0L / (x - 1.0L);
  // d^m [N^(1-x) / (x-1)] = N^(1-x) sum_j C(m,j) (-ln N)^j (-1)^(m-j) (m-j)! (x-1)^-(m-j+1)
  std::vector<long double> inv_pow(order + 2, inv);  // (x-1)^-(i+1) * (-1)^i * i!
  for (int i = 1; i <= order; ++i) inv_pow[i] = inv_pow[i - 1] * (-static_cast<long double>(i)) * inv;
  for (int m = 0; m <= order; ++m) {
    long double acc = 0.0L;
    long double binom = 1.0L;
    long double log_factor = 1.0L;
    for (int j = 0; j <= m; ++j) {
      acc += binom * log_factor * inv_pow[m - j];
      binom = binom * (m - j) / (j + 1);
      log_factor *= -log_n;
    }
    jet[m] += n_pow * acc;
  }
  return jet;
}

std::vector<long double> log_jet(std::span<const long double> f) {
  if (f.empty()) return {};
  if (f[0] == 0.0L) throw DomainError("log_jet: function vanishes");
  const int n_max = static_cast<int>(f.size()) - 1;
  std::vector<long double> out(f.size());
  out[0] = std::log(std::abs(f[0]));
  // f^(n) = sum_{k=0}^{n-1} C(n-1,k) f^(k) L^(n-k)
  for (int n = 1; n <= n_max; ++n) {
    long double acc = f[n];
    long double binom = 1.0L;  // C(n-1, k)
    for (int k = 1; k <= n - 1; ++k) {
      binom = binom * (n - k) / k;
      acc -= binom * f[k] * out[n - k];
    }
    out[n] = acc / f[0];
  }
  return out;
}

double zeta_real(double x) {
  return static_cast<double>(zeta_jet(x, 0)[0]);
}

double zeta_log_derivative(double x) {
  const auto jet = zeta_jet(x, 1);
  return static_cast<double>(jet[1] / jet[0]);
}

double regularized_zeta_log_derivative(double x) {
  const auto jet = regularized_zeta_jet(x, 1);
  return static_cast<double>(jet[1] / jet[0]);
}

}  // namespace magneton
