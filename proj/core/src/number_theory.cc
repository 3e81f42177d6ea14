#include "mspg/number_theory.h"

#include <algorithm>

namespace mspg {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      result.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    result.push_back(n);
  return result;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  if (p < 2 || n == 0)
    return part;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

std::uint64_t pi_part(std::uint64_t n, std::vector<std::uint64_t> const &primes) {
  std::uint64_t part = 1;
  for (auto p : primes)
    part *= p_part(n, p);
  return part;
}

bool is_prime_power(std::uint64_t n) {
  return prime_divisors(n).size() == 1;
}

}  // namespace mspg
