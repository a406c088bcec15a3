#pragma once

// Taylor expansion of ln xi(x) about x = 3/2 (xi without the factor 1/2):
//
//   ln xi(x) = ln zeta(x) + ln(x - 1) + ln x + ln Gamma(x/2) - (x/2) ln pi
//            = sum_n C_n (x - 3/2)^n / n!
//
// The zeta part of C_n is available from two independent routes: the
// differentiated Euler-Maclaurin sum (long double, default) and the prime
// series sum_p sum_k (-k ln p)^n p^(-3k/2) / k with a rigorous tail bound.

#include <cstdint>
#include <optional>
#include <vector>

#include "magneton/specfun.hpp"

namespace magneton {

enum class ZetaPartSource { analytic, primes };

struct TaylorOptions {
  ZetaPartSource source = ZetaPartSource::analytic;
  // BudgetError if the tail bound of the selected route exceeds this.
  std::optional<double> tail_ceiling;
  // Worker threads for the prime sum; the result does not depend on it.
  unsigned threads = 1;
};

struct TaylorCoefficients {
  int order = 0;
  ZetaPartSource source = ZetaPartSource::analytic;
  std::vector<long double> c;            // C_0..C_order from the selected route
  std::vector<long double> analytic_c;   // Euler-Maclaurin route
  std::vector<long double> prime_c;      // prime-series route
  std::vector<double> prime_tail_bound;  // |prime_c[n] - exact C_n| <= this (up to rounding)
  std::uint64_t prime_limit = 0;
  int k_max = 0;

  // Bound on the truncation error of c: the largest prime tail for the prime
  // route, 0 for the analytic route (its Euler-Maclaurin remainder at 64
  // terms is far below long double resolution).
  double tail_bound() const;
};

// Requires 0 <= order <= 20, a nonempty table and k_max >= 1.
TaylorCoefficients compute_coefficients(int order, const PrimeTable& table, int k_max,
                                        const TaylorOptions& options = {});

// ln xi(x), its derivative and half its second derivative at x = 1, from the
// series rearranged about x = 1 using C_0..C_terms (pairwise summation).
struct RearrangedExpansion {
  long double value;
  long double slope;
  long double curvature;
};

RearrangedExpansion rearranged_at_one(const TaylorCoefficients& coeffs, int terms);

struct PartialSums {
  double x;
  std::vector<long double> sums;  // sums[k] uses C_0..C_k
  bool beyond_nominal_radius;     // |x - 3/2| > 1/2
};

PartialSums partial_sums(const TaylorCoefficients& coeffs, double x);

struct LiEstimate {
  double estimate;  // rearranged slope with all available terms
  double exact;     // 1 + gamma/2 - ln(4 pi)/2
  double gap;       // estimate - exact
};

LiEstimate li_estimate_vs_exact(const TaylorCoefficients& coeffs);

struct HiddenPartner {
  double rho_partner;    // rho' > 1 with pi ln zeta(rho' + 1/2) = phi(rho)
  double approximation;  // -ln[(1 + gamma)(rho - 1/2)] / ln 2
};

// Requires 1/2 < rho < 1. Throws BracketError when phi(rho) is outside the
// range (0, phi(1)] of the right branch.
HiddenPartner hidden_symmetry_partner(double rho);

}  // namespace magneton
