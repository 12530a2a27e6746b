#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matring/matrix.hpp"

namespace matring {

using bigrat = boost::multiprecision::cpp_rational;

struct SetProvenance {
  enum class Kind { Explicit, Random, Full, ProductOfEntries } kind = Kind::Explicit;
  std::uint64_t seed = 0;
  std::uint64_t size = 0;                 // requested size (Random)
  std::vector<std::uint32_t> entry_pool;  // ProductOfEntries
  std::string source;                     // Explicit-from-file path, if any
};

// Finite explicit set of n x n matrices over one field, stored as sorted
// deduplicated canonical indices.
class MatrixSet {
 public:
  static MatrixSet full(std::uint32_t n, const FieldCtx& f, const Caps& caps = {});
  // deterministic in (seed, size, n, ctx); duplicates are rejected until the
  // requested size is reached
  static MatrixSet random(std::uint32_t n, const FieldCtx& f, std::uint64_t seed,
                          std::uint64_t size, const Caps& caps = {});
  static MatrixSet explicit_set(std::uint32_t n, const FieldCtx& f, std::vector<MatF> members,
                                std::string source = {});
  // all matrices whose every entry lies in `entries` (realizes M_n(T) mod p)
  static MatrixSet product_of_entries(std::uint32_t n, const FieldCtx& f,
                                      std::vector<std::uint32_t> entries,
                                      const Caps& caps = {});

  std::uint32_t n() const { return n_; }
  const FieldCtx& ctx() const { return *ctx_; }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  std::uint64_t size() const { return indices_.size(); }
  MatF member(std::size_t i) const { return MatF::from_index(n_, *ctx_, indices_[i]); }
  const SetProvenance& provenance() const { return prov_; }

  MatrixSet translated(const MatF& g) const;  // {A + g : A in this}

 private:
  MatrixSet(std::uint32_t n, const FieldCtx& f) : n_(n), ctx_(&f) {}
  std::uint32_t n_;
  const FieldCtx* ctx_;
  std::vector<std::uint64_t> indices_;
  SetProvenance prov_;
};

// Determinant class of every matrix in the space, indexed by canonical matrix
// index: 1 = singular, 2 = det one, 0 = other. One scan, reused by both
// counters.
std::vector<std::uint8_t> det_class_table(std::uint32_t n, const FieldCtx& f,
                                          const Caps& caps = {});

// N_{n,q}(A, B): ordered pairs with det(A+B) = 0. With distinct_sums set,
// counts distinct singular sums instead (no theorem envelope applies there).
std::uint64_t count_singular_sums(const MatrixSet& a, const MatrixSet& b,
                                  const Caps& caps = {}, bool distinct_sums = false);
// T_{n,q}(A, B): ordered pairs with det(A+B) = 1
std::uint64_t count_sl_sums(const MatrixSet& a, const MatrixSet& b, const Caps& caps = {},
                            bool distinct_sums = false);

// multiplicity of every sum value X over A x B, indexed by matrix index
std::vector<std::uint64_t> sum_multiplicity_table(const MatrixSet& a, const MatrixSet& b,
                                                  const Caps& caps = {});

// R(A, B, C, D; H): solutions of (A+B)(C+D) = H, via the two sum-multiplicity
// tables and a pass over GL
bigint count_sumproduct(const MatrixSet& a, const MatrixSet& b, const MatrixSet& c,
                        const MatrixSet& d, const MatF& h, const Caps& caps = {});

enum class GapKind { N, T, R };

// Observed count against the main term and the constant-1 error envelope.
// All arithmetic is exact rational until the final decimal rendering; the
// ratio is published, never asserted here.
struct GapReport {
  GapKind kind;
  std::uint32_t n = 0;
  std::uint32_t p = 0, k = 0, q = 0;
  bigint observed;
  bigrat main_term;
  bigrat gap;             // |observed - main_term|
  double envelope = 0;    // q^e * sqrt(prod of set sizes), constant 1
  double ratio = 0;       // gap / envelope
  std::vector<std::uint64_t> set_sizes;
};

GapReport gap_report(GapKind kind, const std::vector<const MatrixSet*>& sets,
                     const MatF* h = nullptr, const Caps& caps = {});

struct AsymRow {
  std::uint32_t p = 0, k = 0;
  std::uint64_t q = 0;
  std::uint64_t size_a = 0, size_b = 0;
  bigint observed;
  double ratio = 0;  // q * observed / (#A #B)
};

struct AsymTable {
  GapKind kind;  // N or T
  std::uint32_t n = 0;
  std::string rule;
  std::uint64_t seed = 0;
  std::vector<AsymRow> rows;
};

// One row per field; rule is "full" or "rand:<exp>" (set sizes round(q^exp),
// per-row seed = seed + q).
AsymTable asymptotic_table(GapKind kind, std::uint32_t n,
                           const std::vector<std::pair<std::uint32_t, std::uint32_t>>& fields,
                           const std::string& rule, std::uint64_t seed, const Caps& caps = {});

}  // namespace matring
