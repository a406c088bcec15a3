#pragma once

// Closed-form potential phi(rho), its field E = phi', the reflection defect
// f(rho) = phi(rho) - phi(1 - rho), the field jumps at rho = 0, 1/2, 1 and
// the symmetrised well S(x) in the shifted variable x = rho + 1/2.
//
// Inside the strip 0 < rho < 1 the closed forms hold under the Riemann
// hypothesis only; RhMode::outside_strip_only refuses such queries.

#include <optional>
#include <string>
#include <vector>

namespace magneton {

enum class RhMode { conditional_rh, outside_strip_only };

enum class Side { left, right };

// True when rho lies strictly inside (0, 1), where values are RH-conditional.
bool inside_strip(double rho);

// Piecewise closed form:
//   rho >= 1       pi ln zeta(rho + 1/2)
//   1/2 < rho < 1  pi ln[(rho - 1/2) zeta(rho + 1/2) / (3/2 - rho)]
//   rho = 1/2      0
//   0 < rho < 1/2  reflection of the previous piece through f(rho)
//   rho <= 0       pi ln[pi^(rho - 1/2) zeta(3/2 - rho) Gamma(3/4 - rho/2) / Gamma(1/4 - rho/2)]
// Throws ModeError inside the strip in outside_strip_only mode.
double phi_closed(double rho, RhMode mode = RhMode::conditional_rh);

// f(rho) = pi [ln(pi) (rho - 1/2) + ln Gamma(1/4 + |rho - 1|/2) - ln Gamma(1/4 + |rho|/2)]
double symmetry_defect(double rho);

// phi'(rho) on the open piece containing rho. Throws JumpPointError at
// rho in {0, 1/2, 1}; use field_E_onesided there.
double field_E(double rho, RhMode mode = RhMode::conditional_rh);

// Limit of phi' from the given side. Equals field_E away from jump points.
double field_E_onesided(double rho, Side side, RhMode mode = RhMode::conditional_rh);

// phi'(1-) - phi'(1+) = 4 pi.
double jump_at_one();
// phi'(0+) - phi'(0-) = pi (-4 + gamma + 3 ln 2 + pi/2).
double jump_at_zero();
// 1 + gamma/2 - ln(4 pi)/2.
double lambda_one();
// pi (ln pi + gamma + 2 ln 2) / 2, the slope at 1/2 if phi were differentiable there.
double slope_at_half();
// phi'(1/2+) = pi (1 + gamma).
double field_half_plus();

// phi'(1-) - phi'(1/2+) - phi'(1+), assembled from the one-sided field
// limits. Equals pi (3 - gamma). Throws ModeError in outside_strip_only mode.
double volchkov_delta(RhMode mode = RhMode::conditional_rh);

// S(x) = (phi(x - 1/2) + phi(3/2 - x)) / 2, evaluated through d = |x - 1| so
// that S(x) == S(2 - x) holds bit for bit.
double well_S(double x, RhMode mode = RhMode::conditional_rh);

// A closed-form constant next to an independent numeric estimate.
struct ConstantCheck {
  std::string name;
  double analytic = 0.0;
  double numeric = 0.0;
  double tolerance = 0.0;

  double discrepancy() const;
  bool ok() const { return discrepancy() <= tolerance; }
};

// Numeric routes use one-sided second-order differences of phi_closed
// (step 1e-4) or field_E at offsets of 1e-7, never the analytic one-sided
// formulas.
ConstantCheck check_jump_at_one();
ConstantCheck check_jump_at_zero();
ConstantCheck check_field_half_plus();
ConstantCheck check_slope_at_half();
ConstantCheck check_lambda_one();
ConstantCheck check_volchkov_delta();
std::vector<ConstantCheck> potential_constant_checks();

struct PotentialSample {
  double rho = 0.0;
  std::optional<double> phi_numeric;
  double phi_closed = 0.0;
  std::optional<double> field_E;
  double symmetry_f = 0.0;
  std::optional<double> well_S;  // at x = rho + 1/2
};

// Fills every field that is defined at rho (field_E is left empty at jump
// points). phi_numeric is left to the caller.
PotentialSample sample_potential(double rho, RhMode mode = RhMode::conditional_rh);

}  // namespace magneton
