#pragma once

#include <cstdint>
#include <vector>

namespace sublat {

/// Default ceiling for trial-division factorization.
inline constexpr std::int64_t kDefaultFactorCap = 1'000'000'000'000;

/// Prime factorization by deterministic trial division, ascending, with
/// multiplicity. Throws ResourceError when n exceeds `cap`, DomainError for n < 1.
std::vector<std::int64_t> factorize(std::int64_t n,
                                    std::int64_t cap = kDefaultFactorCap);

/// Distinct primes of n, ascending.
std::vector<std::int64_t> distinct_primes(std::int64_t n,
                                          std::int64_t cap = kDefaultFactorCap);

/// All positive divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);

/// Product of the distinct primes dividing n; radical_of(0) == 0, radical_of(1) == 1.
std::int64_t radical_of(std::int64_t n);

/// Exponent of p in n (n > 0).
int valuation(std::int64_t n, std::int64_t p);

/// lcm with the convention lcm(0, x) == 0.
std::int64_t lcm0(std::int64_t a, std::int64_t b);

/// Canonical nonnegative residue.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace sublat
