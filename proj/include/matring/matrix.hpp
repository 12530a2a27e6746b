#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matring/errors.hpp"
#include "matring/field.hpp"

namespace matring {

using bigint = boost::multiprecision::cpp_int;

enum class Space { All, GL, SL, Singular };

// Enumeration/pair caps. Defaults keep every documented run under a minute;
// each one is overridable from the CLI.
struct Caps {
  std::uint64_t scan_cap = 1ull << 24;   // matrices scanned per enumeration
  std::uint64_t pair_cap = 1ull << 26;   // (A,B) pairs per counting run
  std::uint64_t tuple_cap = 1ull << 22;  // exhaustive survey tuples
  std::uint64_t table_cap = 1ull << 22;  // sum-multiplicity table entries
  unsigned workers = 1;
  bool scalar_diag = false;  // opt-in n = 1 diagnostic mode
};

// n >= 2 everywhere; n = 1 is a scalar diagnostic mode that must be requested
// explicitly.
void require_dim(std::uint32_t n, bool scalar_diag = false);

// Exact n x n matrix over a FieldCtx, entries stored row-major as canonical
// element indices. The ctx must outlive the matrix.
class MatF {
 public:
  MatF(std::uint32_t n, const FieldCtx& ctx)
      : n_(n), ctx_(&ctx), e_(static_cast<std::size_t>(n) * n, 0) {}
  static MatF identity(std::uint32_t n, const FieldCtx& ctx);
  static MatF from_entries(std::uint32_t n, const FieldCtx& ctx,
                           std::vector<std::uint32_t> entries);
  // entries are the base-q digits of `index`, first entry least significant
  static MatF from_index(std::uint32_t n, const FieldCtx& ctx, std::uint64_t index);
  // 1 at (0,0), zero elsewhere
  static MatF e11(std::uint32_t n, const FieldCtx& ctx);

  std::uint32_t n() const { return n_; }
  const FieldCtx& ctx() const { return *ctx_; }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return e_[i * n_ + j]; }
  void set(std::uint32_t i, std::uint32_t j, std::uint32_t idx) { e_[i * n_ + j] = idx; }
  std::span<const std::uint32_t> entries() const { return e_; }
  std::uint64_t index() const;
  bool is_zero() const;

  MatF operator+(const MatF& o) const;
  MatF operator-(const MatF& o) const;
  MatF operator*(const MatF& o) const;  // matrix product
  MatF scaled(std::uint32_t lambda) const;
  MatF negated() const;
  friend bool operator==(const MatF& a, const MatF& b) {
    return a.n_ == b.n_ && a.ctx_->same(*b.ctx_) && a.e_ == b.e_;
  }

 private:
  std::uint32_t n_;
  const FieldCtx* ctx_;
  std::vector<std::uint32_t> e_;
};

// determinant by elimination with partial pivoting (first nonzero pivot);
// exact and independent of pivot choices
Felt det(const MatF& m);
std::uint32_t det_entries(std::span<const std::uint32_t> e, std::uint32_t n,
                          const FieldCtx& f);
unsigned rank(const MatF& m);
MatF inverse(const MatF& m);  // Singular if det = 0
// scalar product U . X = sum of entrywise products
Felt dot(const MatF& u, const MatF& x);

// q^{n^2} without overflow surprises
bigint space_cardinality(std::uint32_t n, const FieldCtx& f);
// throws CapExceeded (naming the required scan size) unless q^{n^2} <= cap
std::uint64_t checked_space_size(std::uint32_t n, const FieldCtx& f, std::uint64_t cap);

// Visit matrices with raw index in [lo, hi) belonging to `space`, in canonical
// order (entries as base-q digits, row-major, element order from the field).
// Consecutive ranges concatenate to the full stream.
void scan_space(Space space, std::uint32_t n, const FieldCtx& f, std::uint64_t lo,
                std::uint64_t hi,
                const std::function<void(std::uint64_t, std::span<const std::uint32_t>)>& fn);

std::vector<MatF> enumerate(Space space, std::uint32_t n, const FieldCtx& f,
                            const Caps& caps = {});

// closed-form orders (exact big integers)
bigint gl_order(std::uint32_t n, const bigint& q);
bigint sl_order(std::uint32_t n, const bigint& q);
bigint z_order(std::uint32_t n, const bigint& q);

struct RankProfile {
  std::vector<bigint> counts;       // enumerated, indexed by rank
  std::vector<bigint> closed_form;  // Gaussian-binomial cross-check
};
RankProfile rank_profile(std::uint32_t n, const FieldCtx& f, const Caps& caps = {});
// matrices of rank exactly r among n x n over F_q
bigint rank_count_closed_form(std::uint32_t n, std::uint32_t r, const bigint& q);

}  // namespace matring
