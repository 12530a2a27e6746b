#include "matring/kernels.hpp"

namespace matring::kernels {

namespace {

void weighted_args_scalar(const std::uint16_t* const* planes, std::uint32_t m,
                          const std::uint32_t* weights, std::size_t count,
                          std::uint32_t p, std::uint16_t* args) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t acc = 0;
    for (std::uint32_t t = 0; t < m; ++t) acc += weights[t] * planes[t][i];
    args[i] = static_cast<std::uint16_t>(acc % p);
  }
}

void pair_sum_indices_scalar(const std::uint16_t* const* planes, std::uint32_t m,
                             const std::uint32_t* base, const std::uint32_t* powq,
                             std::size_t count, std::uint32_t p, std::uint32_t* idx) {
  for (std::size_t i = 0; i < count; ++i) {
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

const Backend& scalar_backend() {
  static const Backend b{"scalar", &weighted_args_scalar, &pair_sum_indices_scalar};
  return b;
}

void histogram_args(const std::uint16_t* args, std::size_t count, std::uint64_t* counts) {
  for (std::size_t i = 0; i < count; ++i) counts[args[i]]++;
}

}  // namespace matring::kernels
