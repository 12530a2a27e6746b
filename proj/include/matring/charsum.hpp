#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "matring/matrix.hpp"

namespace matring {

// Exact character-sum accumulator: counts[a] is the number of summed terms
// whose character argument is a, so the sum itself is
// sum_a counts[a] * e(a/p). Accumulation is pure integer arithmetic; the
// complex evaluation happens only at reporting time (its rounding error is
// bounded by p * total * machine epsilon).
struct CharAccum {
  std::uint32_t p = 0;
  std::vector<std::uint64_t> counts;

  CharAccum() = default;
  explicit CharAccum(std::uint32_t p_) : p(p_), counts(p_, 0) {}

  void add(std::uint32_t arg, std::uint64_t w = 1) { counts[arg] += w; }
  void merge(const CharAccum& o);
  std::uint64_t total() const;
  std::complex<double> value() const;
  double modulus() const { return std::abs(value()); }
  // accumulator of the conjugate sum (arguments negated mod p)
  CharAccum conjugated() const;

  friend bool operator==(const CharAccum&, const CharAccum&) = default;
};

// Materialized matrix list in struct-of-planes layout. Planes (uint16 residues
// per entry position) exist only for prime fields within the kernel range;
// everything else uses the generic row path.
class MatListSoA {
 public:
  static MatListSoA collect(Space space, std::uint32_t n, const FieldCtx& f,
                            const Caps& caps = {}, bool with_inverses = false);
  // plane layout over externally supplied rows (used for H X^{-1} scratch)
  static MatListSoA from_rows(std::uint32_t n, const FieldCtx& f,
                              std::vector<std::uint32_t> rows);

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  const FieldCtx& ctx() const { return *ctx_; }
  std::size_t count() const { return count_; }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return {rows_.data() + i * m_, m_};
  }
  std::span<const std::uint32_t> inv_row(std::size_t i) const {
    return {inv_rows_.data() + i * m_, m_};
  }
  bool has_inverses() const { return !inv_rows_.empty(); }
  bool has_planes() const { return !planes_.empty(); }
  const std::uint16_t* plane(std::uint32_t t) const { return planes_[t].data(); }

 private:
  MatListSoA() = default;
  void build_planes();

  std::uint32_t n_ = 0, m_ = 0;
  const FieldCtx* ctx_ = nullptr;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> rows_;      // count x m entry indices
  std::vector<std::uint32_t> inv_rows_;  // entries of X^{-1}, GL domains only
  std::vector<std::vector<std::uint16_t>> planes_;
};

// S(Z_n(F_q), U): psi(U.X) accumulated over all singular X
CharAccum sum_singular(const MatF& u, const Caps& caps = {});
// S(SL_n(F_q), U)
CharAccum sum_sl(const MatF& u, const Caps& caps = {});
// K(GL_n(F_q), U, V, H) = sum over invertible X of psi(U.X + V.(H X^{-1}))
CharAccum kloosterman(const MatF& u, const MatF& v, const MatF& h, const Caps& caps = {});

// same sums over a prebuilt domain (surveys reuse one domain across tuples)
CharAccum charsum_over(const MatListSoA& dom, const MatF& u, const Caps& caps = {});
CharAccum kloosterman_over(const MatListSoA& gl_dom, const MatF& u, const MatF& v,
                           const MatF& h, const Caps& caps = {});

enum class SumKind { Singular, SL, Kloosterman };

struct ScanSpec {
  enum class Mode { Exhaustive, Sampled } mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;  // Sampled only
  std::uint32_t h_count = 1;  // Kloosterman exhaustive: |{I} + seeded GL sample|
};

// Measured envelope for one of the three sums: the maximum complex modulus
// over the scanned parameter tuples, the witness attaining it, and the
// implied constant observed_max / q^exponent the O(.) bounds leave implicit.
struct BoundReport {
  SumKind kind;
  std::uint32_t n = 0;
  std::uint32_t p = 0, k = 0, q = 0;
  std::string envelope_exponent;  // exact rational, e.g. "3/2"
  double exponent_value = 0;
  double observed_max = 0;
  double implied_constant = 0;
  std::uint64_t scanned = 0;
  ScanSpec scan;
  std::vector<MatF> witness;  // {U} or {U, V, H}
};

BoundReport bound_survey(SumKind kind, std::uint32_t n, const FieldCtx& f,
                         const ScanSpec& scan, const Caps& caps = {});

// rational exponent of the envelope q^e for each sum kind, as (num, den)
std::pair<std::int64_t, std::int64_t> envelope_exponent(SumKind kind, std::uint32_t n);

}  // namespace matring
