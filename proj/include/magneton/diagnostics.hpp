#pragma once

// How much a hypothetical zero off the critical line would move the
// potential, and the zeros of the symmetric well.

namespace magneton {

// A zero a + i t0 with 1/2 < a < 1 and t0 > 0.
class OffLineZero {
 public:
  // Throws DomainError outside the ranges above.
  OffLineZero(double a, double t0);
  double a() const noexcept { return a_; }
  double t0() const noexcept { return t0_; }

 private:
  double a_;
  double t0_;
};

// The offset term of the first-order correction can be read two ways; the
// default treats it as a - 1/2, which vanishes for a zero on the line.
enum class OffsetReading { a_minus_half, a_power_minus_half };

// First-order change of the potential near x = 1 caused by the zero:
//   2 (a - 1/2) / t0^2 - 2 (x - 1) / t0^2
// (or 2 a^(-1/2) / t0^2 for the first term under the alternative reading).
double offline_zero_correction(const OffLineZero& z, double x,
                               OffsetReading reading = OffsetReading::a_minus_half);

// Worst-case correction to the potential if every zero above t0 left the
// line: (c / 2 pi) ln(t0) / t0. Requires t0 > e (where it is decreasing) and c > 0.
double tail_bound(double t0, double c = 1.0);

// Main term (T / 2 pi) ln(T / 2 pi) of the zero counting function. Requires T > 2 pi.
double zero_count_estimate(double T);

// Height below which about n zeros lie, 2 pi n / ln n. Requires n > 1.
double height_for_zero_index(double n);

struct WellZeros {
  double x1;        // in (3/2, 2)
  double x2;        // 2 - x1
  double residual;  // ln of the defining product at x1
  double xi_at_x1;  // xi(x1), real and positive
};

// Solves zeta(x)^2 Gamma(x/2) / Gamma((x - 1)/2) pi^(1 - x) = 1 for x in
// (3/2, 2) by bracketed root finding on its logarithm.
WellZeros well_zeros();

}  // namespace magneton
