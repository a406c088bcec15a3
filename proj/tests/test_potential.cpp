#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "magneton/errors.hpp"
#include "magneton/potential.hpp"
#include "magneton/specfun.hpp"

using namespace magneton;
using doctest::Approx;

namespace {
constexpr double kPi = constants::pi;
constexpr double kGamma = constants::euler_gamma;
}  // namespace

TEST_CASE("phi_closed tabulated values") {
  CHECK(std::abs(phi_closed(1.0) - 3.016745) < 1e-6);
  CHECK(std::abs(phi_closed(0.0) - -2.189208) < 1e-6);
  CHECK(std::abs(phi_closed(0.7) - 1.052322) < 2e-5);
  CHECK(std::abs(phi_closed(0.3) - -0.918670) < 1e-6);
  CHECK(std::abs(phi_closed(1.5) - 1.563571) < 1e-6);
  CHECK(phi_closed(0.5) == 0.0);
  // right of one the closed form is pi ln zeta(rho + 1/2)
  CHECK(phi_closed(1.5) == Approx(kPi * std::log(kPi * kPi / 6.0)).epsilon(1e-15));
}

TEST_CASE("symmetry_defect") {
  CHECK(symmetry_defect(0.5) == 0.0);
  CHECK(std::abs(symmetry_defect(1.0) - 5.20595) < 1e-5);
  CHECK(std::abs(symmetry_defect(0.6) - 0.97869) < 1e-5);
  CHECK(symmetry_defect(0.3) == Approx(-symmetry_defect(0.7)).epsilon(1e-14));
}

TEST_CASE("reflection identity holds for the closed forms") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> dist(-3.0, 4.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double rho = dist(rng);
    worst = std::max(worst, std::abs(phi_closed(rho) - phi_closed(1.0 - rho) - symmetry_defect(rho)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("continuity across the piece boundaries") {
  for (double b : {0.0, 0.5, 1.0}) {
    CAPTURE(b);
    CHECK(std::abs(phi_closed(b - 1e-8) - phi_closed(b + 1e-8)) < 1e-6);
  }
}

TEST_CASE("field_E") {
  CHECK(field_E_onesided(0.5, Side::right) == Approx(kPi * (1.0 + kGamma)).epsilon(1e-14));
  CHECK(std::abs(field_E_onesided(0.5, Side::right) - 4.954967) < 3e-6);
  CHECK(field_E_onesided(0.5, Side::left) ==
        Approx(kPi * (std::log(4.0 * kPi) - 1.0)).epsilon(1e-14));
  CHECK(std::abs(field_E(40.0)) < 1e-10);
  CHECK(field_E(40.0) < 0.0);

  const double h = 1e-6;
  CHECK(std::abs(field_E(2.0) - (phi_closed(2.0 + h) - phi_closed(2.0 - h)) / (2.0 * h)) < 1e-5);

  CHECK_THROWS_AS(field_E(0.0), JumpPointError);
  CHECK_THROWS_AS(field_E(0.5), JumpPointError);
  CHECK_THROWS_AS(field_E(1.0), JumpPointError);
  CHECK(field_E_onesided(2.0, Side::left) == field_E(2.0));
}

TEST_CASE("field_E matches differences of phi_closed away from jumps") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-2.5, 3.5);
  const double h = 1e-5;
  for (int i = 0; i < 100; ++i) {
    const double rho = dist(rng);
    if (std::abs(rho) < 1e-3 || std::abs(rho - 0.5) < 1e-3 || std::abs(rho - 1.0) < 1e-3) continue;
    CAPTURE(rho);
    const double fd = (phi_closed(rho + h) - phi_closed(rho - h)) / (2.0 * h);
    CHECK(field_E(rho) == Approx(fd).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("jump constants") {
  CHECK(jump_at_one() == Approx(4.0 * kPi).epsilon(1e-16));
  CHECK(std::abs(field_E(1.0 - 1e-7) - field_E(1.0 + 1e-7) - 4.0 * kPi) < 1e-4);
  CHECK(field_E_onesided(1.0, Side::left) - field_E_onesided(1.0, Side::right) ==
        Approx(jump_at_one()).epsilon(1e-13));
  // same value whichever mode the right side is read in
  CHECK(field_E_onesided(1.0, Side::right, RhMode::outside_strip_only) ==
        field_E_onesided(1.0, Side::right));

  CHECK(std::abs(jump_at_zero() - 0.714567) < 1e-6);
  CHECK(jump_at_zero() - kPi * (-4.0 + 3.0 * std::log(2.0) + kPi / 2.0) ==
        Approx(kPi * kGamma).epsilon(1e-12));
  // orientation: right limit minus left limit
  CHECK(field_E_onesided(0.0, Side::right) - field_E_onesided(0.0, Side::left) ==
        Approx(jump_at_zero()).epsilon(1e-12));

  CHECK(std::abs(lambda_one() - 0.0230957) < 1e-7);
  CHECK((field_half_plus() - slope_at_half()) / kPi == Approx(lambda_one()).epsilon(1e-10));
  CHECK(volchkov_delta() == Approx(kPi * (3.0 - kGamma)).epsilon(1e-13));
  CHECK(jump_at_one() - field_half_plus() == Approx(kPi * (3.0 - kGamma)).epsilon(1e-14));
  CHECK(jump_at_one() > 0.0);
  CHECK(lambda_one() > 0.0);
}

TEST_CASE("numeric cross-checks of the constants") {
  for (const auto& c : potential_constant_checks()) {
    CAPTURE(c.name);
    CAPTURE(c.numeric);
    CHECK(c.ok());
  }
}

TEST_CASE("well_S") {
  CHECK(well_S(1.0) == 0.0);
  CHECK(well_S(1.3) == well_S(0.7));
  CHECK(well_S(2.9) == well_S(-0.9));
  CHECK(std::abs(well_S(1.610217484)) < 1e-8);
  CHECK(well_S(1.600217484) * well_S(1.620217484) < 0.0);
}

TEST_CASE("midpoint pair of the well is anti-symmetric") {
  const double rho1 = 1.1102174836;
  const double rho2 = 1.0 - rho1;
  CHECK(std::abs(phi_closed(rho1) + phi_closed(rho2)) < 1e-6);
}

TEST_CASE("outside_strip_only mode") {
  const auto out = RhMode::outside_strip_only;
  CHECK_THROWS_AS(phi_closed(0.3, out), ModeError);
  CHECK_THROWS_AS(phi_closed(0.7, out), ModeError);
  CHECK_THROWS_AS(field_E(0.7, out), ModeError);
  CHECK_THROWS_AS(field_E_onesided(1.0, Side::left, out), ModeError);
  CHECK_THROWS_AS(field_E_onesided(0.0, Side::right, out), ModeError);
  CHECK_THROWS_AS(volchkov_delta(out), ModeError);
  CHECK_THROWS_AS(well_S(1.2, out), ModeError);
  CHECK(phi_closed(0.0, out) == phi_closed(0.0));
  CHECK(phi_closed(1.0, out) == phi_closed(1.0));
  CHECK(phi_closed(-1.0, out) == phi_closed(-1.0));
  CHECK(well_S(2.0, out) == well_S(2.0));
  CHECK_NOTHROW(field_E_onesided(0.0, Side::left, out));
}

TEST_CASE("sample_potential") {
  const auto s = sample_potential(0.8);
  CHECK(s.phi_closed == phi_closed(0.8));
  CHECK(s.symmetry_f == symmetry_defect(0.8));
  REQUIRE(s.field_E.has_value());
  REQUIRE(s.well_S.has_value());
  CHECK(*s.well_S == well_S(1.3));
  CHECK_FALSE(s.phi_numeric.has_value());
  CHECK_FALSE(sample_potential(0.5).field_E.has_value());
  const auto outside = sample_potential(2.0, RhMode::outside_strip_only);
  CHECK(outside.well_S.has_value());
  CHECK_THROWS_AS(sample_potential(0.4, RhMode::outside_strip_only), ModeError);
}
