#pragma once

#include <cstddef>
#include <cstdint>

namespace matring::kernels {

// Inner-loop kernels for prime fields (k = 1), where an element index is its
// residue mod p. Matrix sets are laid out as struct-of-planes: planes[t][i] is
// entry t of member i. Extension fields and out-of-range p take the generic
// element-wise path in the owning module instead.
//
// args[i] = (sum_t weights[t] * planes[t][i]) mod p
// preconditions: weights[t] < p, plane values < p, fits(m, p)
using WeightedArgsFn = void (*)(const std::uint16_t* const* planes, std::uint32_t m,
                                const std::uint32_t* weights, std::size_t count,
                                std::uint32_t p, std::uint16_t* args);

// idx[i] = sum_t ((base[t] + planes[t][i]) mod p) * powq[t]
// preconditions: base[t] < p, plane values < p, sum of (p-1)*powq[t] < 2^31
using PairSumIndexFn = void (*)(const std::uint16_t* const* planes, std::uint32_t m,
                                const std::uint32_t* base, const std::uint32_t* powq,
                                std::size_t count, std::uint32_t p, std::uint32_t* idx);

struct Backend {
  const char* name;
  WeightedArgsFn weighted_args;
  PairSumIndexFn pair_sum_indices;
};

const Backend& scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
const Backend& avx2_backend();
#endif

bool avx2_available();

// Runtime-selected backend: AVX2 when the CPU has it, scalar otherwise.
// MATRING_KERNEL=scalar|avx2 overrides. Results are identical either way
// (exact integers) and the equivalence suite enforces that.
const Backend& active();
void set_active(const Backend& b);  // test hook

// value-range guard for the vector paths: per-term products must accumulate
// in 32-bit lanes without wrapping
inline bool fits(std::uint32_t m, std::uint32_t p) {
  if (p < 2 || p >= (1u << 13)) return false;
  return static_cast<std::uint64_t>(m) * (p - 1) * (p - 1) < (1ull << 32);
}

void histogram_args(const std::uint16_t* args, std::size_t count, std::uint64_t* counts);

}  // namespace matring::kernels
