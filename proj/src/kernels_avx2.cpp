// AVX2 variants of the prime-field kernels. This translation unit is compiled
// with -mavx2; callers must check avx2_available() before selecting it.

#include "matring/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace matring::kernels {

namespace {

// high 32 bits of the 8 lane-wise u32 products
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i prod_even = _mm256_mul_epu32(a, b);
  __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  __m256i hi_even = _mm256_srli_epi64(prod_even, 32);
  __m256i hi_odd = _mm256_and_si256(prod_odd, _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ull)));
  return _mm256_blend_epi32(hi_even, hi_odd, 0b10101010);
}

// x mod p for x < 2^32, p < 2^13: Barrett with M = floor(2^32 / p) leaves a
// remainder < 3p, fixed by two conditional subtracts (lane values stay well
// inside signed range)
inline __m256i mod_small(__m256i x, __m256i pv, __m256i mv) {
  __m256i qhat = mulhi_epu32(x, mv);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(qhat, pv));
  __m256i ge = _mm256_cmpgt_epi32(pv, r);  // p > r
  r = _mm256_sub_epi32(r, _mm256_andnot_si256(ge, pv));
  ge = _mm256_cmpgt_epi32(pv, r);
  r = _mm256_sub_epi32(r, _mm256_andnot_si256(ge, pv));
  return r;
}

void weighted_args_avx2(const std::uint16_t* const* planes, std::uint32_t m,
                        const std::uint32_t* weights, std::size_t count,
                        std::uint32_t p, std::uint16_t* args) {
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i mv = _mm256_set1_epi32(static_cast<int>(0xFFFFFFFFu / p));
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i acc = _mm256_setzero_si256();
    for (std::uint32_t t = 0; t < m; ++t) {
      __m256i lane = _mm256_cvtepu16_epi32(
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(planes[t] + i)));
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(lane, _mm256_set1_epi32(static_cast<int>(weights[t]))));
    }
    __m256i r = mod_small(acc, pv, mv);
    __m128i lo = _mm256_castsi256_si128(r);
    __m128i hi = _mm256_extracti128_si256(r, 1);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(args + i), _mm_packus_epi32(lo, hi));
  }
  for (; i < count; ++i) {
    std::uint32_t acc = 0;
    for (std::uint32_t t = 0; t < m; ++t) acc += weights[t] * planes[t][i];
    args[i] = static_cast<std::uint16_t>(acc % p);
  }
}

void pair_sum_indices_avx2(const std::uint16_t* const* planes, std::uint32_t m,
                           const std::uint32_t* base, const std::uint32_t* powq,
                           std::size_t count, std::uint32_t p, std::uint32_t* idx) {
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i acc = _mm256_setzero_si256();
    for (std::uint32_t t = 0; t < m; ++t) {
      __m256i d = _mm256_cvtepu16_epi32(
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(planes[t] + i)));
      d = _mm256_add_epi32(d, _mm256_set1_epi32(static_cast<int>(base[t])));
      __m256i lt = _mm256_cmpgt_epi32(pv, d);  // p > d
      d = _mm256_sub_epi32(d, _mm256_andnot_si256(lt, pv));
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(d, _mm256_set1_epi32(static_cast<int>(powq[t]))));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(idx + i), acc);
  }
  for (; i < count; ++i) {
    std::uint32_t acc = 0;
    for (std::uint32_t t = 0; t < m; ++t) {
      std::uint32_t d = base[t] + planes[t][i];
      if (d >= p) d -= p;
      acc += d * powq[t];
    }
    idx[i] = acc;
  }
}

}  // namespace

const Backend& avx2_backend() {
  static const Backend b{"avx2", &weighted_args_avx2, &pair_sum_indices_avx2};
  return b;
}

}  // namespace matring::kernels

#endif  // x86_64
