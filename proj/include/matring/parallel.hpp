#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <vector>

namespace matring {

// Split [0, total) into at most `workers` consecutive chunks, apply fn(lo, hi)
// to each, and return the per-chunk results in chunk order. Callers merge in
// that order, so the outcome never depends on scheduling.
template <class R, class Fn>
std::vector<R> map_ranges(std::uint64_t total, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = 1;
  std::uint64_t nchunks = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1));
  std::vector<R> out;
  if (nchunks <= 1) {
    out.push_back(fn(0, total));
    return out;
  }
  std::vector<std::future<R>> futs;
  futs.reserve(nchunks);
  const std::uint64_t chunk = total / nchunks;
  const std::uint64_t rem = total % nchunks;
  std::uint64_t lo = 0;
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    const std::uint64_t hi = lo + chunk + (c < rem ? 1 : 0);
    futs.push_back(std::async(std::launch::async, [lo, hi, &fn] { return fn(lo, hi); }));
    lo = hi;
  }
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace matring
