#pragma once

#include <cstdint>

namespace matring {

// SplitMix64 (Vigna's finalizer constants). Pinned by name so reports carrying a
// seed can be reproduced bit-for-bit by any implementation of the same stream.
// Bounded draws are next() % bound; reproducibility matters here, not uniformity
// of the last few ulps.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace matring
