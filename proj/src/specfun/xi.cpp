#include <cmath>

#include "magneton/specfun.hpp"

namespace magneton {

Complex xi(Complex s, const ZetaConfig& cfg) {
  // At s = -2, -4, ... the pole of Gamma(1 + s/2) cancels a trivial zero;
  // the reflected point is regular.
  if (s.imag() == 0.0 && s.real() <= -2.0 && std::fmod(s.real(), 2.0) == 0.0) {
    return xi(1.0 - s, cfg);
  }
  // s (s-1) Gamma(s/2) = 2 Gamma(1 + s/2) (s-1), which keeps s = 0 regular.
  const Complex half = 0.5 * s;
  const Complex gamma_part = std::exp(log_gamma(1.0 + half) - half * constants::ln_pi);
  return 2.0 * gamma_part * zeta_times_s_minus_one(s, cfg);
}

}  // namespace magneton
