#pragma once

#include <cstdint>
#include <vector>

namespace matring {

// Deterministic trial-division primality; intended for the desk-scale ranges
// used here (fits comfortably below 2^62 where trial division is exact).
bool is_prime_u64(std::uint64_t n);

// All primes in [lo, hi], both ends inclusive. Simple sieve with base primes
// up to sqrt(hi). Throws RangeTooLarge for hi > 2^31.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// Distinct prime factors of |v| by trial division, ascending. v must be nonzero.
std::vector<std::uint64_t> distinct_prime_factors(std::int64_t v);

}  // namespace matring
