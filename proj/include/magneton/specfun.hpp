#pragma once

// Special functions underneath the potential computations: the Riemann zeta
// function (Euler-Maclaurin), log-Gamma (Stirling with argument shift),
// digamma / polygamma (via an internal Hurwitz zeta), the completed xi
// function, and a prime sieve with the Euler-product series for ln zeta.
//
// Everything here is a pure function of its arguments and safe to call from
// any number of threads.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace magneton {

using Complex = std::complex<double>;

namespace constants {
inline constexpr long double pi_l = 3.141592653589793238462643383279502884L;
inline constexpr long double euler_gamma_l = 0.577215664901532860606512090082402431L;
inline constexpr long double ln_pi_l = 1.144729885849400174143427351353058712L;
inline constexpr long double ln2_l = 0.693147180559945309417232121458176568L;

inline constexpr double pi = static_cast<double>(pi_l);
inline constexpr double euler_gamma = static_cast<double>(euler_gamma_l);
inline constexpr double ln_pi = static_cast<double>(ln_pi_l);
inline constexpr double ln2 = static_cast<double>(ln2_l);
}  // namespace constants

// ---------------------------------------------------------------------------
// Riemann zeta

struct ZetaConfig {
  // Largest |Im s| accepted. The term count below is tuned so that the
  // absolute error stays under 1e-12 throughout |Im s| <= 200; raise both
  // together if you need more height.
  double max_height = 200.0;
  int min_terms = 30;
  double terms_per_unit_height = 1.3;
};

// |zeta| below this is treated as an exact zero by log_abs_zeta.
inline constexpr double kZetaUnderflowFloor = 1e-300;

// zeta(s) for s != 1 and |Im s| <= cfg.max_height. Re s >= 0 is summed
// directly; Re s < 0 goes through the functional equation.
// Throws PoleError at s = 1, WindowError above the supported height and
// DomainError for non-finite input.
Complex zeta(Complex s, const ZetaConfig& cfg = {});

// ln|zeta(s)|. Returns -infinity when |zeta(s)| < kZetaUnderflowFloor,
// i.e. when s sits on a zero to working precision.
double log_abs_zeta(Complex s, const ZetaConfig& cfg = {});

// (s - 1) * zeta(s), entire; equals 1 at s = 1.
Complex zeta_times_s_minus_one(Complex s, const ZetaConfig& cfg = {});

// ---------------------------------------------------------------------------
// Real-axis zeta jets
//
// Derivatives are obtained by differentiating the Euler-Maclaurin sum term
// by term, so one-sided limits at the pole are exact rather than differenced.

// d^m/dx^m [(x - 1) zeta(x)] for m = 0..order. Regular at x = 1. Requires x > 0.
std::vector<long double> regularized_zeta_jet(long double x, int order);

// d^m/dx^m zeta(x) for m = 0..order. Requires x > 0, x != 1.
std::vector<long double> zeta_jet(long double x, int order);

// Given f, f', ..., f^(n) at a point with f != 0, returns the derivatives of
// ln f at that point: (ln f, (ln f)', ..., (ln f)^(n)). Entry 0 is ln|f|.
std::vector<long double> log_jet(std::span<const long double> f);

// zeta on the positive real axis (x != 1).
double zeta_real(double x);

// zeta'(x) / zeta(x) on the positive real axis (x != 1).
double zeta_log_derivative(double x);

// d/dx ln[(x - 1) zeta(x)] = zeta'/zeta(x) + 1/(x - 1); equals Euler's
// gamma at x = 1.
double regularized_zeta_log_derivative(double x);

// ---------------------------------------------------------------------------
// Gamma family

// Principal-type ln Gamma(s): real on the positive axis and continuous along
// every vertical line that avoids the poles. For Re s < 0 the imaginary part
// may differ from the conjugate-symmetric branch by a multiple of 2*pi;
// Re ln Gamma = ln|Gamma| is unaffected. Throws PoleError at s = 0, -1, -2, ...
Complex log_gamma(Complex s);

// ln Gamma(x) for real x > 0.
double log_gamma(double x);
long double log_gamma(long double x);

// psi^(m)(x) for x > 0: m = 0 is the digamma function, m >= 1 uses
// psi^(m)(x) = (-1)^(m+1) m! zeta_H(m + 1, x).
double polygamma(int m, double x);
long double polygamma(int m, long double x);

// Hurwitz zeta zeta_H(s, a) = sum_{n>=0} (n + a)^-s for s > 1, a > 0.
double hurwitz_zeta(double s, double a);
long double hurwitz_zeta(long double s, long double a);

// ---------------------------------------------------------------------------
// Completed zeta

// xi(s) = pi^(-s/2) s (s - 1) Gamma(s/2) zeta(s), without the conventional
// factor 1/2, so xi(0) = xi(1) = 1. The removable singularities at s = 0
// and s = 1 are filled in. Only the height window can make this throw.
Complex xi(Complex s, const ZetaConfig& cfg = {});

// ---------------------------------------------------------------------------
// Primes

struct SieveBudget {
  std::size_t max_bytes = std::size_t{1} << 30;
};

// Immutable, complete list of the primes <= limit.
class PrimeTable {
 public:
  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }

 private:
  friend PrimeTable sieve_primes(std::uint64_t limit, const SieveBudget& budget);
  PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

// Sieve of Eratosthenes over odd numbers. limit >= 2. Throws CapacityError
// when the estimated footprint exceeds the budget.
PrimeTable sieve_primes(std::uint64_t limit, const SieveBudget& budget = {});

struct PrimeSeries {
  double value;       // sum over listed primes and k <= k_max
  double tail_bound;  // rigorous bound on everything left out (not rounding)
};

// ln zeta(x) = sum_p sum_k p^(-k x) / k for x > 1, truncated to the table and
// to k <= k_max. The tail bound covers primes above the table limit (integral
// test over all integers) and the k truncation.
PrimeSeries log_zeta_primes(double x, const PrimeTable& table, int k_max);

}  // namespace magneton
