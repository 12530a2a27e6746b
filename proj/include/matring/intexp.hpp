#pragma once

#include <cstdint>
#include <vector>

#include "matring/matrix.hpp"
#include "matring/primes.hpp"

namespace matring {

// Set of positive integers bounded by N, sorted and deduplicated.
struct IntSet {
  std::uint64_t N = 0;
  std::vector<std::uint64_t> members;

  static IntSet range(std::uint64_t N);  // {1, ..., N}
  static IntSet from_list(std::vector<std::uint64_t> values, std::uint64_t N = 0);
  static IntSet random(std::uint64_t seed, std::uint64_t size, std::uint64_t N);
  std::uint64_t size() const { return members.size(); }
};

// number of residue classes mod p hit by the set
std::uint64_t nu_p(const IntSet& t, std::uint64_t p);
// sum over classes of the squared multiplicities
std::uint64_t sigma_p(const IntSet& t, std::uint64_t p);

struct CensusRow {
  std::uint64_t p = 0;
  std::uint64_t nu = 0;
  double threshold = 0;  // p / (20 ln N ln p)
  bool pass = false;
};

// Residue-class census over the primes in [Q, 2Q]: how often
// nu_p >= p / (20 ln N ln p) holds, with the asymptotic floor 0.6 Q / ln Q
// reported alongside (never asserted; it only binds for large Q).
struct ResClassCensus {
  std::uint64_t N = 0, Q = 0;
  std::vector<CensusRow> rows;
  std::uint64_t prime_count = 0;
  std::uint64_t pass_count = 0;
  double pass_fraction = 0;
  double lemma_floor = 0;
  bool meets_lemma_floor = false;
};

ResClassCensus resclass_census(const IntSet& t, std::uint64_t Q);

// Distinct primes dividing at least one nonzero det(A+B) over
// M_n(R) x M_n(S). Pairs whose determinant vanishes are excluded from the
// product and reported separately.
struct OmegaReport {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> primes;
  std::uint64_t omega = 0;
  std::uint64_t zero_det_pairs = 0;
  std::uint64_t total_pairs = 0;
};

OmegaReport omega_w(const IntSet& r, const IntSet& s, std::uint32_t n, const Caps& caps = {});

// true iff some pair has nonzero integer determinant divisible by p, decided
// through the mod-p sumset machinery with a witness lifted back to Z
bool divides_w(const IntSet& r, const IntSet& s, std::uint32_t n, std::uint64_t p,
               const Caps& caps = {});

}  // namespace matring
