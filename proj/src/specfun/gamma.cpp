#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "bernoulli.hpp"
#include "magneton/errors.hpp"
#include "magneton/specfun.hpp"

namespace magneton {
namespace {

using detail::kBernoulliEven;

// Stirling series is used once |z| >= this, after shifting upwards.
constexpr double kStirlingThreshold = 15.0;
constexpr long double kStirlingThresholdReal = 20.0L;
constexpr int kStirlingTerms = 12;

// log with arg in (-pi/2, 3pi/2] for points in the left half plane. Along a
// vertical line Re w is fixed, so this never jumps.
Complex continuous_log(Complex w) {
  Complex l = std::log(w);
  if (w.real() < 0.0 && l.imag() < 0.0) l += Complex{0.0, 2.0 * constants::pi};
  return l;
}

template <typename Z>
Z stirling(Z z) {
  using R = decltype(std::abs(z));
  const R half_log_two_pi = static_cast<R>(0.918938533204672741780329736405617639L);
  Z sum = (z - R(0.5)) * std::log(z) - z + half_log_two_pi;
  const Z inv = R(1) / z;
  const Z inv2 = inv * inv;
  Z power = inv;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    const R coeff = static_cast<R>(kBernoulliEven[k - 1] / ((2.0L * k) * (2.0L * k - 1.0L)));
    sum += coeff * power;
    power *= inv2;
  }
  return sum;
}

template <typename T>
T log_gamma_positive(T x, const char* what) {
  if (!std::isfinite(x) || x <= T(0)) {
    throw DomainError(std::string(what) + ": requires a finite x > 0");
  }
  T shift = 0;
  while (x < static_cast<T>(kStirlingThresholdReal)) {
    shift += std::log(x);
    x += T(1);
  }
  return stirling(x) - shift;
}

template <typename T>
T digamma_positive(T x) {
  T acc = 0;
  while (x < static_cast<T>(kStirlingThresholdReal)) {
    acc -= T(1) / x;
    x += T(1);
  }
  const T inv2 = T(1) / (x * x);
  T series = 0;
  T power = inv2;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    series += static_cast<T>(kBernoulliEven[k - 1] / (2.0L * k)) * power;
    power *= inv2;
  }
  return acc + std::log(x) - T(0.5) / x - series;
}

template <typename T>
T hurwitz_impl(T s, T a) {
  if (!(s > T(1)) || !(a > T(0)) || !std::isfinite(s) || !std::isfinite(a)) {
    throw DomainError("hurwitz_zeta: requires s > 1 and a > 0");
  }
  const int n_terms = 40 + 2 * static_cast<int>(std::ceil(s));
  T head = 0;
  for (int n = n_terms - 1; n >= 0; --n) head += std::pow(n + a, -s);

  const T big = n_terms + a;
  const T big_pow = std::pow(big, -s);  // (N+a)^-s
  T sum = head + big * big_pow / (s - T(1)) + T(0.5) * big_pow;

  T rising = s;
  T factor = big_pow / big;
  const T inv2 = T(1) / (big * big);
  for (int k = 1; k <= static_cast<int>(detail::kEulerMaclaurinWeights.size()); ++k) {
    sum += static_cast<T>(detail::kEulerMaclaurinWeights[k - 1]) * rising * factor;
    rising *= (s + (2 * k - 1)) * (s + 2 * k);
    factor *= inv2;
  }
  return sum;
}

template <typename T>
T polygamma_impl(int m, T x) {
  if (m < 0) throw DomainError("polygamma: order must be >= 0");
  if (!std::isfinite(x) || x <= T(0)) throw DomainError("polygamma: requires x > 0");
  if (m == 0) return digamma_positive(x);
  T factorial = 1;
  for (int i = 2; i <= m; ++i) factorial *= i;
  const T sign = (m % 2 == 1) ? T(1) : T(-1);
  return sign * factorial * hurwitz_impl(static_cast<T>(m + 1), x);
}

// ln Gamma(2 + z) = (1 - gamma) z + sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k.
// On |z| <= 1/2 the terms fall like 4^-k and the result is a sum of small
// numbers, unlike the shifted Stirling route, which cancels two values near 40.
constexpr int kNearTwoTerms = 40;

long double log_gamma_near_two(long double x) {
  static const std::array<long double, kNearTwoTerms + 1> zeta_minus_one = [] {
    std::array<long double, kNearTwoTerms + 1> out{};
    for (int k = 2; k <= kNearTwoTerms; ++k) out[k] = hurwitz_impl<long double>(k, 2.0L);
    return out;
  }();
  if (x < 1.5L) return log_gamma_near_two(x + 1.0L) - std::log(x);
  const long double z = x - 2.0L;
  long double sum = 0.0L;
  for (int k = kNearTwoTerms; k >= 2; --k) {
    sum = z * (sum + ((k % 2 == 0) ? 1.0L : -1.0L) * zeta_minus_one[k] / k);
  }
  return z * (1.0L - constants::euler_gamma_l + sum);
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError("log_gamma: pole at non-positive integer");
  }
  if (z.imag() == 0.0 && z.real() > 0.0) {
    return {log_gamma(z.real()), 0.0};
  }
  Complex shift{0.0, 0.0};
  while (z.real() < 0.0 || std::abs(z) < kStirlingThreshold) {
    shift += continuous_log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

double log_gamma(double x) {
  return static_cast<double>(log_gamma(static_cast<long double>(x)));
}

long double log_gamma(long double x) {
  if (x >= 0.5L && x <= 2.5L) return log_gamma_near_two(x);
  return log_gamma_positive<long double>(x, "log_gamma");
}

double polygamma(int m, double x) {
  return static_cast<double>(polygamma_impl<long double>(m, x));
}

long double polygamma(int m, long double x) {
  return polygamma_impl<long double>(m, x);
}

double hurwitz_zeta(double s, double a) {
  return static_cast<double>(hurwitz_impl<long double>(s, a));
}

long double hurwitz_zeta(long double s, long double a) {
  return hurwitz_impl<long double>(s, a);
}

}  // namespace magneton
