#ifndef MSPG_NUMBER_THEORY_H_
#define MSPG_NUMBER_THEORY_H_

#include <cstdint>
#include <vector>

namespace mspg {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order; empty for n <= 1.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// Product of the p-parts of n over p in primes.
std::uint64_t pi_part(std::uint64_t n, std::vector<std::uint64_t> const &primes);

/// True iff n > 1 and n is a power of a single prime.
bool is_prime_power(std::uint64_t n);

}  // namespace mspg

#endif  // MSPG_NUMBER_THEORY_H_
