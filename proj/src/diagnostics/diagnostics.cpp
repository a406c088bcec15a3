#include "magneton/diagnostics.hpp"

#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "magneton/errors.hpp"
#include "magneton/roots.hpp"
#include "magneton/specfun.hpp"

namespace magneton {

OffLineZero::OffLineZero(double a, double t0) : a_(a), t0_(t0) {
  if (!(a > 0.5 && a < 1.0)) {
    throw DomainError(fmt::format("OffLineZero: real part {} is not in (1/2, 1)", a));
  }
  if (!(t0 > 0.0) || !std::isfinite(t0)) {
    throw DomainError(fmt::format("OffLineZero: ordinate {} must be positive and finite", t0));
  }
}

double offline_zero_correction(const OffLineZero& z, double x, OffsetReading reading) {
  if (!std::isfinite(x)) throw DomainError("offline_zero_correction: x must be finite");
  const double inv_t2 = 1.0 / (z.t0() * z.t0());
  const double offset =
      reading == OffsetReading::a_minus_half ? z.a() - 0.5 : 1.0 / std::sqrt(z.a());
  return 2.0 * offset * inv_t2 - 2.0 * (x - 1.0) * inv_t2;
}

double tail_bound(double t0, double c) {
  if (!(t0 > std::numbers::e)) {
    throw DomainError(fmt::format("tail_bound: t0 = {} must exceed e", t0));
  }
  if (!(c > 0.0)) throw DomainError("tail_bound: c must be positive");
  return c / (2.0 * constants::pi) * std::log(t0) / t0;
}

double zero_count_estimate(double T) {
  const double u = T / (2.0 * constants::pi);
  if (!(u > 1.0)) throw DomainError(fmt::format("zero_count_estimate: T = {} must exceed 2 pi", T));
  return u * std::log(u);
}

double height_for_zero_index(double n) {
  if (!(n > 1.0)) throw DomainError("height_for_zero_index: n must exceed 1");
  return 2.0 * constants::pi * n / std::log(n);
}

WellZeros well_zeros() {
  const auto h = [](double x) {
    return 2.0 * std::log(zeta_real(x)) + (1.0 - x) * constants::ln_pi + log_gamma(x / 2.0) -
           log_gamma((x - 1.0) / 2.0);
  };
  const auto r = find_root(h, 1.5, 1.7, 1e-13);
  return {r.root, 2.0 - r.root, r.residual, xi(Complex(r.root, 0.0)).real()};
}

}  // namespace magneton
