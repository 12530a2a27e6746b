#include "matring/primes.hpp"

#include <algorithm>
#include <cstddef>

#include "matring/errors.hpp"

namespace matring {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2) lo = 2;
  if (hi > (1ull << 31)) {
    throw RangeTooLargeError("prime sieve upper bound " + std::to_string(hi) + " > 2^31");
  }
  if (lo > hi) return {};

  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) <= hi) ++root;

  // base primes up to sqrt(hi)
  std::vector<char> small(root + 1, 1);
  for (std::uint64_t i = 2; i * i <= root; ++i) {
    if (small[i]) {
      for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }
  }

  std::vector<char> seg(hi - lo + 1, 1);
  for (std::uint64_t p = 2; p <= root; ++p) {
    if (!small[p]) continue;
    std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
    for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
  }

  std::vector<std::uint64_t> out;
  for (std::uint64_t v = lo; v <= hi; ++v) {
    if (v >= 2 && seg[v - lo]) out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> distinct_prime_factors(std::int64_t v) {
  std::uint64_t m = static_cast<std::uint64_t>(v < 0 ? -v : v);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : {2ull, 3ull}) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  for (std::uint64_t d = 5; d * d <= m; d += 6) {
    for (std::uint64_t p : {d, d + 2}) {
      if (m % p == 0) {
        out.push_back(p);
        while (m % p == 0) m /= p;
      }
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace matring
