#include <cmath>
#include <limits>
#include <string>

#include "magneton/errors.hpp"
#include "magneton/specfun.hpp"

namespace magneton {

PrimeTable sieve_primes(std::uint64_t limit, const SieveBudget& budget) {
  if (limit < 2) throw DomainError("sieve_primes: limit must be >= 2");
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    throw CapacityError("sieve_primes: limit exceeds 32-bit prime storage");
  }
  const double lim = static_cast<double>(limit);
  const double estimated_count = 1.26 * lim / std::log(lim) + 16.0;
  const double estimated_bytes = lim / 16.0 + 4.0 * estimated_count;
  if (estimated_bytes > static_cast<double>(budget.max_bytes)) {
    throw CapacityError("sieve_primes: limit " + std::to_string(limit) + " needs ~" +
                        std::to_string(static_cast<std::uint64_t>(estimated_bytes)) +
                        " bytes, budget is " + std::to_string(budget.max_bytes));
  }

  // composite[i] describes the odd number 2i + 1.
  const std::uint64_t n_odd = (limit - 1) / 2 + 1;
  std::vector<bool> composite(n_odd, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = p * p; j <= limit; j += 2 * p) composite[(j - 1) / 2] = true;
  }

  std::vector<std::uint32_t> primes;
  primes.reserve(static_cast<std::size_t>(estimated_count));
  primes.push_back(2);
  for (std::uint64_t i = 1; i < n_odd; ++i) {
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  return PrimeTable(limit, std::move(primes));
}

PrimeSeries log_zeta_primes(double x, const PrimeTable& table, int k_max) {
  if (!(x > 1.0) || !std::isfinite(x)) {
    throw DomainError("log_zeta_primes: Euler product diverges for x <= 1");
  }
  if (k_max < 1) throw DomainError("log_zeta_primes: k_max must be >= 1");

  long double value = 0.0L;
  long double k_tail = 0.0L;
  for (const std::uint32_t p : table.primes()) {
    const long double base = std::pow(static_cast<long double>(p), -static_cast<long double>(x));
    long double power = base;
    for (int k = 1; k <= k_max && power != 0.0L; ++k) {
      value += power / k;
      power *= base;
    }
    // power is now p^-(k_max+1)x; the left-out k's form a dominated geometric series.
    k_tail += power / ((k_max + 1) * (1.0L - base));
  }

  const long double lim = static_cast<long double>(table.limit());
  const long double lim_pow = std::pow(lim, -static_cast<long double>(x));
  const long double prime_tail = lim * lim_pow / ((x - 1.0L) * (1.0L - lim_pow));
  return {static_cast<double>(value), static_cast<double>(prime_tail + k_tail)};
}

}  // namespace magneton
