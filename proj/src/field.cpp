#include "matring/field.hpp"

#include <cstddef>

#include "matring/errors.hpp"
#include "matring/primes.hpp"

namespace matring {

namespace {

// remainder of f by monic g, both coefficient vectors over Z_p (c0 first)
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> f,
                                    const std::vector<std::uint32_t>& g,
                                    std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    std::uint32_t lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        std::uint64_t t = static_cast<std::uint64_t>(lead) * g[i] % p;
        f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - t) % p);
      }
    }
    f.pop_back();
  }
  return f;
}

bool is_zero_poly(const std::vector<std::uint32_t>& f) {
  for (std::uint32_t c : f)
    if (c != 0) return false;
  return true;
}

// has a monic divisor of degree in [1, deg/2]?
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d * 2 <= k; ++d) {
    std::vector<std::uint32_t> g(d + 1, 0);
    g[d] = 1;
    // odometer over the d lower coefficients of g
    for (;;) {
      if (is_zero_poly(poly_rem(f, g, p))) return false;
      std::size_t pos = 0;
      while (pos < d && ++g[pos] == p) g[pos++] = 0;
      if (pos == d) break;
    }
  }
  return true;
}

}  // namespace

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime_u64(p)) throw NotPrimeError(p);
  if (k < 1 || k > kMaxDegree) {
    throw SizeExceededError("extension degree k = " + std::to_string(k) +
                            " outside [1, " + std::to_string(kMaxDegree) + "]");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxCardinality) {
      throw SizeExceededError("p^k exceeds cardinality cap 2^20 (p = " +
                              std::to_string(p) + ", k = " + std::to_string(k) + ")");
    }
  }

  FieldCtx f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    f.modulus_ = {0, 1};  // the polynomial t
  } else {
    // Scan monic candidates t^k + c_{k-1} t^{k-1} + ... + c_0 in lexicographic
    // order of [c0, c1, ..., c_{k-1}] and keep the first irreducible one.
    std::vector<std::uint32_t> c(k, 0);
    for (;;) {
      std::vector<std::uint32_t> cand(c.begin(), c.end());
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        f.modulus_ = std::move(cand);
        break;
      }
      // lex successor: bump the last coordinate first
      std::size_t pos = k;
      while (pos > 0 && ++c[pos - 1] == p) c[--pos] = 0;
      if (pos == 0) throw SizeExceededError("no irreducible modulus found");  // unreachable
    }
  }

  // reduction rows t^{k+j} mod modulus for the schoolbook multiply
  if (k > 1) {
    std::vector<std::uint32_t> row(k);
    for (std::uint32_t i = 0; i < k; ++i) row[i] = (p - f.modulus_[i] % p) % p;  // t^k
    f.redtab_.push_back(row);
    for (std::uint32_t j = 1; j + 1 < k; ++j) {
      std::vector<std::uint32_t> nxt(k, 0);
      std::uint32_t carry = row[k - 1];
      for (std::uint32_t i = k - 1; i > 0; --i) nxt[i] = row[i - 1];
      nxt[0] = 0;
      if (carry != 0) {
        for (std::uint32_t i = 0; i < k; ++i) {
          std::uint64_t t = static_cast<std::uint64_t>(carry) * f.redtab_[0][i] % p;
          nxt[i] = static_cast<std::uint32_t>((nxt[i] + t) % p);
        }
      }
      f.redtab_.push_back(nxt);
      row = nxt;
    }
  }

  // Tr(t^i) by Frobenius orbits; trace is F_p-linear so these fix Tr everywhere
  f.basis_trace_.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t mono = 1;
    for (std::uint32_t s = 0; s < i; ++s) mono *= p;  // index of t^i
    std::uint32_t acc = mono;
    std::uint32_t y = mono;
    for (std::uint32_t s = 1; s < k; ++s) {
      y = f.pow(y, p);
      acc = f.add(acc, y);
    }
    f.basis_trace_[i] = acc % p;  // acc lies in the prime subfield
  }
  return f;
}

std::vector<std::uint32_t> FieldCtx::coeffs(std::uint32_t a) const {
  std::vector<std::uint32_t> c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint32_t FieldCtx::from_coeffs(std::span<const std::uint32_t> c) const {
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p_ + (c[i] % p_);
  return idx;
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t idx = 0, mul = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    idx += (a % p_ + b % p_) % p_ * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return idx;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t idx = 0, mul = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t c = a % p_;
    idx += (c == 0 ? 0 : p_ - c) * mul;
    a /= p_;
    mul *= p_;
  }
  return idx;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + p_ - b) % p_;
  return add(a, neg(b));
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  std::uint32_t ca[kMaxDegree], cb[kMaxDegree];
  for (std::uint32_t i = 0; i < k_; ++i) {
    ca[i] = a % p_;
    a /= p_;
    cb[i] = b % p_;
    b /= p_;
  }
  std::uint64_t w[2 * kMaxDegree - 1] = {0};
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      w[i + j] += static_cast<std::uint64_t>(ca[i]) * cb[j];
    }
  }
  std::uint64_t res[kMaxDegree];
  for (std::uint32_t i = 0; i < k_; ++i) res[i] = w[i] % p_;
  for (std::uint32_t j = k_; j <= 2 * k_ - 2; ++j) {
    std::uint64_t c = w[j] % p_;
    if (c == 0) continue;
    const auto& row = redtab_[j - k_];
    for (std::uint32_t i = 0; i < k_; ++i) res[i] += c * row[i];
  }
  std::uint32_t idx = 0, m = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    idx += static_cast<std::uint32_t>(res[i] % p_) * m;
    m *= p_;
  }
  return idx;
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = one();
  std::uint32_t base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZeroError();
  return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

std::uint32_t FieldCtx::trace(std::uint32_t a) const {
  if (k_ == 1) return a;
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    acc += static_cast<std::uint64_t>(a % p_) * basis_trace_[i];
    a /= p_;
  }
  return static_cast<std::uint32_t>(acc % p_);
}

namespace {
const FieldCtx& common_ctx(const Felt& a, const Felt& b) {
  if (!a.ctx().same(b.ctx())) throw CtxMismatchError();
  return a.ctx();
}
}  // namespace

Felt operator+(const Felt& a, const Felt& b) {
  const FieldCtx& f = common_ctx(a, b);
  return Felt(f.add(a.index(), b.index()), f);
}

Felt operator-(const Felt& a, const Felt& b) {
  const FieldCtx& f = common_ctx(a, b);
  return Felt(f.sub(a.index(), b.index()), f);
}

Felt operator-(const Felt& a) { return Felt(a.ctx().neg(a.index()), a.ctx()); }

Felt operator*(const Felt& a, const Felt& b) {
  const FieldCtx& f = common_ctx(a, b);
  return Felt(f.mul(a.index(), b.index()), f);
}

Felt inv(const Felt& a) { return Felt(a.ctx().inv(a.index()), a.ctx()); }

std::uint32_t trace(const Felt& a) { return a.ctx().trace(a.index()); }

}  // namespace matring
