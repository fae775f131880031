#include "sublat/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sublat/errors.hpp"

namespace sublat {

std::vector<std::int64_t> factorize(std::int64_t n, std::int64_t cap) {
  if (n < 1) throw DomainError("factorize: argument must be >= 1, got " + std::to_string(n));
  if (n > cap)
    throw ResourceError("factorize: " + std::to_string(n) + " exceeds factorization cap " +
                        std::to_string(cap));
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int64_t> distinct_primes(std::int64_t n, std::int64_t cap) {
  auto f = factorize(n, cap);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw DomainError("divisors: argument must be >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::int64_t radical_of(std::int64_t n) {
  if (n == 0) return 0;
  if (n < 0) n = -n;
  std::int64_t r = 1;
  for (auto p : distinct_primes(n)) r *= p;
  return r;
}

int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t lcm0(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

}  // namespace sublat
