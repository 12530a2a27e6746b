#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace matring {

class FieldCtx;

// Exact element of F_{p^k}. The value is the canonical index: the coefficient
// vector of the residue polynomial read as a base-p integer, constant term
// least significant. Elements are tagged with their field; mixing fields in
// arithmetic raises CtxMismatch. The FieldCtx must outlive its elements.
class Felt {
 public:
  Felt() : idx_(0), ctx_(nullptr) {}
  Felt(std::uint32_t idx, const FieldCtx& ctx) : idx_(idx), ctx_(&ctx) {}

  std::uint32_t index() const { return idx_; }
  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return idx_ == 0; }

  friend bool operator==(const Felt& a, const Felt& b) = default;

 private:
  std::uint32_t idx_;
  const FieldCtx* ctx_;
};

// A constructed finite field F_{p^k}, immutable after construction and safe to
// share across threads. The modulus is the lexicographically smallest monic
// irreducible degree-k polynomial over Z_p (coefficients compared from the
// constant term upward), so two constructions with equal (p, k) are identical.
// For k = 1 the modulus is the polynomial t.
class FieldCtx {
 public:
  static constexpr std::uint32_t kMaxDegree = 8;
  static constexpr std::uint64_t kMaxCardinality = 1u << 20;

  // field_new: validates p prime (trial division), 1 <= k <= 8, p^k <= 2^20.
  static FieldCtx make(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  // c0..ck, monic (back() == 1)
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // index-level arithmetic (hot paths work on raw canonical indices)
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // DivisionByZero on a == 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t one() const { return k_ == 1 ? (1 % p_) : 1; }

  // embedding of Z_p
  std::uint32_t scalar(std::uint32_t residue) const { return residue % p_; }

  // absolute trace Tr(x) = sum x^{p^i}, landing in Z_p; this is the character
  // argument of psi(x) = e(Tr(x)/p)
  std::uint32_t trace(std::uint32_t a) const;

  std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
  std::uint32_t from_coeffs(std::span<const std::uint32_t> c) const;

  Felt elt(std::uint32_t idx) const { return Felt(idx, *this); }

  bool operator==(const FieldCtx& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }
  bool same(const FieldCtx& o) const { return this == &o || *this == o; }

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;             // length k+1
  std::vector<std::vector<std::uint32_t>> redtab_; // t^{k+j} mod modulus, j in [0, k-1)
  std::vector<std::uint32_t> basis_trace_;         // Tr(t^i), i in [0, k)
};

// element-level convenience suite
Felt operator+(const Felt& a, const Felt& b);
Felt operator-(const Felt& a, const Felt& b);
Felt operator-(const Felt& a);
Felt operator*(const Felt& a, const Felt& b);
Felt inv(const Felt& a);
std::uint32_t trace(const Felt& a);

}  // namespace matring
