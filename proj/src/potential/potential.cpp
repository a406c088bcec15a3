#include "magneton/potential.hpp"

#include <cmath>

#include <fmt/core.h>

#include "magneton/errors.hpp"
#include "magneton/specfun.hpp"

namespace magneton {
namespace {

using constants::euler_gamma_l;
using constants::ln2_l;
using constants::ln_pi_l;
using constants::pi_l;

constexpr double kFiniteDifferenceStep = 1e-4;
constexpr double kJumpOffset = 1e-7;

void require_finite(double rho, const char* what) {
  if (!std::isfinite(rho)) throw DomainError(std::string(what) + ": rho must be finite");
}

void require_mode(double rho, RhMode mode, const char* what) {
  if (mode == RhMode::outside_strip_only && inside_strip(rho)) {
    throw ModeError(fmt::format("{}: rho = {} lies inside the critical strip; the closed form "
                                "there assumes RH (use conditional mode)",
                                what, rho));
  }
}

// ln[(x - 1) zeta(x)] and its derivative.
struct RegularizedLog {
  long double value;
  long double slope;
};

RegularizedLog regularized_log(long double x) {
  const auto jet = regularized_zeta_jet(x, 1);
  return {std::log(jet[0]), jet[1] / jet[0]};
}

long double ln_zeta(long double x) { return std::log(zeta_jet(x, 0)[0]); }

long double zeta_log_slope(long double x) {
  const auto jet = zeta_jet(x, 1);
  return jet[1] / jet[0];
}

enum class Piece { right_of_one, upper_strip, lower_strip, left_of_zero };

long double phi_on_piece(long double rho, Piece piece) {
  switch (piece) {
    case Piece::right_of_one:
      return pi_l * ln_zeta(rho + 0.5L);
    case Piece::upper_strip: {
      const long double x = rho + 0.5L;
      return pi_l * (regularized_log(x).value - std::log(2.0L - x));
    }
    case Piece::lower_strip: {
      const long double y = 1.5L - rho;
      const long double first = regularized_log(y).value - std::log(rho + 0.5L);
      const long double second = ln_pi_l * (0.5L - rho) + log_gamma(0.25L + 0.5L * rho) -
                                 log_gamma(0.75L - 0.5L * rho);
      return pi_l * (first - second);
    }
    case Piece::left_of_zero:
      return pi_l * ((rho - 0.5L) * ln_pi_l + ln_zeta(1.5L - rho) +
                     log_gamma(0.75L - 0.5L * rho) - log_gamma(0.25L - 0.5L * rho));
  }
  return 0.0L;
}

long double field_on_piece(long double rho, Piece piece) {
  switch (piece) {
    case Piece::right_of_one:
      return pi_l * zeta_log_slope(rho + 0.5L);
    case Piece::upper_strip: {
      const long double x = rho + 0.5L;
      return pi_l * (regularized_log(x).slope + 1.0L / (2.0L - x));
    }
    case Piece::lower_strip: {
      const long double y = 1.5L - rho;
      return pi_l * (-regularized_log(y).slope - 1.0L / (rho + 0.5L) + ln_pi_l -
                     0.5L * (polygamma(0, 0.25L + 0.5L * rho) + polygamma(0, 0.75L - 0.5L * rho)));
    }
    case Piece::left_of_zero:
      return pi_l * (ln_pi_l - zeta_log_slope(1.5L - rho) +
                     0.5L * (polygamma(0, 0.25L - 0.5L * rho) - polygamma(0, 0.75L - 0.5L * rho)));
  }
  return 0.0L;
}

Piece piece_for_phi(double rho) {
  if (rho >= 1.0) return Piece::right_of_one;
  if (rho > 0.5) return Piece::upper_strip;
  if (rho > 0.0) return Piece::lower_strip;
  return Piece::left_of_zero;
}

// Piece used for a one-sided limit at rho.
Piece piece_for_side(double rho, Side side) {
  if (side == Side::right) {
    if (rho >= 1.0) return Piece::right_of_one;
    if (rho >= 0.5) return Piece::upper_strip;
    if (rho >= 0.0) return Piece::lower_strip;
    return Piece::left_of_zero;
  }
  if (rho > 1.0) return Piece::right_of_one;
  if (rho > 0.5) return Piece::upper_strip;
  if (rho > 0.0) return Piece::lower_strip;
  return Piece::left_of_zero;
}

bool is_jump_point(double rho) { return rho == 0.0 || rho == 0.5 || rho == 1.0; }

// Second-order one-sided derivative of phi_closed at a.
double one_sided_difference(double a, Side side) {
  const double h = side == Side::right ? kFiniteDifferenceStep : -kFiniteDifferenceStep;
  const double f0 = phi_closed(a);
  const double f1 = phi_closed(a + h);
  const double f2 = phi_closed(a + 2.0 * h);
  return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

}  // namespace

bool inside_strip(double rho) { return rho > 0.0 && rho < 1.0; }

double phi_closed(double rho, RhMode mode) {
  require_finite(rho, "phi_closed");
  require_mode(rho, mode, "phi_closed");
  if (rho == 0.5) return 0.0;
  return static_cast<double>(phi_on_piece(rho, piece_for_phi(rho)));
}

double symmetry_defect(double rho) {
  require_finite(rho, "symmetry_defect");
  const long double r = rho;
  const long double value = ln_pi_l * (r - 0.5L) + log_gamma(0.25L + 0.5L * std::abs(r - 1.0L)) -
                            log_gamma(0.25L + 0.5L * std::abs(r));
  return static_cast<double>(pi_l * value);
}

double field_E(double rho, RhMode mode) {
  require_finite(rho, "field_E");
  if (is_jump_point(rho)) {
    throw JumpPointError(fmt::format(
        "field_E: the field jumps at rho = {}; use field_E_onesided with an explicit side", rho));
  }
  require_mode(rho, mode, "field_E");
  return static_cast<double>(field_on_piece(rho, piece_for_phi(rho)));
}

double field_E_onesided(double rho, Side side, RhMode mode) {
  require_finite(rho, "field_E_onesided");
  const Piece piece = piece_for_side(rho, side);
  if (mode == RhMode::outside_strip_only &&
      (piece == Piece::upper_strip || piece == Piece::lower_strip)) {
    throw ModeError(fmt::format(
        "field_E_onesided: the {} limit at rho = {} uses the RH-conditional strip form",
        side == Side::left ? "left" : "right", rho));
  }
  return static_cast<double>(field_on_piece(rho, piece));
}

double jump_at_one() { return static_cast<double>(4.0L * pi_l); }

double jump_at_zero() {
  return static_cast<double>(pi_l * (-4.0L + euler_gamma_l + 3.0L * ln2_l + 0.5L * pi_l));
}

double lambda_one() {
  return static_cast<double>(1.0L + 0.5L * euler_gamma_l - 0.5L * std::log(4.0L * pi_l));
}

double slope_at_half() {
  return static_cast<double>(pi_l * (ln_pi_l + euler_gamma_l + 2.0L * ln2_l) / 2.0L);
}

double field_half_plus() { return static_cast<double>(pi_l * (1.0L + euler_gamma_l)); }

double volchkov_delta(RhMode mode) {
  if (mode != RhMode::conditional_rh) {
    throw ModeError("volchkov_delta: needs the field at 1/2+, which assumes RH");
  }
  return field_E_onesided(1.0, Side::left) - field_E_onesided(0.5, Side::right) -
         field_E_onesided(1.0, Side::right);
}

double well_S(double x, RhMode mode) {
  require_finite(x, "well_S");
  const double d = std::abs(x - 1.0);
  const double upper = 0.5 + d;
  const double lower = 0.5 - d;
  require_mode(upper, mode, "well_S");
  require_mode(lower, mode, "well_S");
  return 0.5 * (phi_closed(upper) + phi_closed(lower));
}

double ConstantCheck::discrepancy() const { return std::abs(analytic - numeric); }

ConstantCheck check_jump_at_one() {
  const double numeric = field_E(1.0 - kJumpOffset) - field_E(1.0 + kJumpOffset);
  return {"jump_at_one", jump_at_one(), numeric, 1e-4};
}

ConstantCheck check_jump_at_zero() {
  const double numeric = one_sided_difference(0.0, Side::right) - one_sided_difference(0.0, Side::left);
  return {"jump_at_zero", jump_at_zero(), numeric, 1e-4};
}

ConstantCheck check_field_half_plus() {
  return {"field_half_plus", field_half_plus(), one_sided_difference(0.5, Side::right), 1e-6};
}

ConstantCheck check_slope_at_half() {
  // Half the derivative of f at 1/2, by a central difference.
  const double h = kFiniteDifferenceStep;
  const double numeric = 0.5 * (symmetry_defect(0.5 + h) - symmetry_defect(0.5 - h)) / (2.0 * h);
  return {"slope_at_half", slope_at_half(), numeric, 1e-6};
}

ConstantCheck check_lambda_one() {
  const double numeric = (one_sided_difference(0.5, Side::right) - check_slope_at_half().numeric) /
                         static_cast<double>(pi_l);
  return {"lambda_one", lambda_one(), numeric, 1e-6};
}

ConstantCheck check_volchkov_delta() {
  const double numeric = one_sided_difference(1.0, Side::left) -
                         one_sided_difference(0.5, Side::right) -
                         one_sided_difference(1.0, Side::right);
  return {"volchkov_delta", static_cast<double>(pi_l * (3.0L - euler_gamma_l)), numeric, 1e-6};
}

std::vector<ConstantCheck> potential_constant_checks() {
  return {check_jump_at_one(),  check_jump_at_zero(), check_lambda_one(),
          check_volchkov_delta(), check_slope_at_half(), check_field_half_plus()};
}

PotentialSample sample_potential(double rho, RhMode mode) {
  PotentialSample s;
  s.rho = rho;
  s.phi_closed = phi_closed(rho, mode);
  s.symmetry_f = symmetry_defect(rho);
  if (!is_jump_point(rho)) s.field_E = field_E(rho, mode);
  const double x = rho + 0.5;
  const double d = std::abs(x - 1.0);
  if (mode == RhMode::conditional_rh || !(d < 0.5)) s.well_S = well_S(x, mode);
  return s;
}

}  // namespace magneton
