#include "matring/matrix.hpp"

#include <algorithm>

namespace matring {

void require_dim(std::uint32_t n, bool scalar_diag) {
  if (n == 0) throw ConfigError("dimension n must be positive");
  if (n == 1 && !scalar_diag) {
    throw ConfigError("n = 1 requires scalar diagnostic mode");
  }
  if (n > 4) {
    throw SizeExceededError("dimension n = " + std::to_string(n) + " above exhaustive limit 4");
  }
}

MatF MatF::identity(std::uint32_t n, const FieldCtx& ctx) {
  MatF m(n, ctx);
  for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, ctx.one());
  return m;
}

MatF MatF::e11(std::uint32_t n, const FieldCtx& ctx) {
  MatF m(n, ctx);
  m.set(0, 0, ctx.one());
  return m;
}

MatF MatF::from_entries(std::uint32_t n, const FieldCtx& ctx,
                        std::vector<std::uint32_t> entries) {
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw ConfigError("matrix entry count " + std::to_string(entries.size()) +
                      " does not match n = " + std::to_string(n));
  }
  for (std::uint32_t v : entries) {
    if (v >= ctx.q()) throw ConfigError("entry index " + std::to_string(v) + " outside field");
  }
  MatF m(n, ctx);
  m.e_ = std::move(entries);
  return m;
}

MatF MatF::from_index(std::uint32_t n, const FieldCtx& ctx, std::uint64_t index) {
  MatF m(n, ctx);
  const std::uint64_t q = ctx.q();
  for (std::uint32_t t = 0; t < n * n; ++t) {
    m.e_[t] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  if (index != 0) throw ConfigError("matrix index outside q^(n^2)");
  return m;
}

std::uint64_t MatF::index() const {
  const std::uint64_t q = ctx_->q();
  unsigned __int128 idx = 0;
  for (std::size_t t = e_.size(); t-- > 0;) {
    idx = idx * q + e_[t];
    if (idx > UINT64_MAX) throw CapExceededError("matrix index exceeds 2^64");
  }
  return static_cast<std::uint64_t>(idx);
}

bool MatF::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

namespace {
const FieldCtx& common_ctx(const MatF& a, const MatF& b) {
  if (a.n() != b.n() || !a.ctx().same(b.ctx())) throw CtxMismatchError();
  return a.ctx();
}
}  // namespace

MatF MatF::operator+(const MatF& o) const {
  const FieldCtx& f = common_ctx(*this, o);
  MatF r(n_, *ctx_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = f.add(e_[t], o.e_[t]);
  return r;
}

MatF MatF::operator-(const MatF& o) const {
  const FieldCtx& f = common_ctx(*this, o);
  MatF r(n_, *ctx_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = f.sub(e_[t], o.e_[t]);
  return r;
}

MatF MatF::operator*(const MatF& o) const {
  const FieldCtx& f = common_ctx(*this, o);
  MatF r(n_, *ctx_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      std::uint32_t acc = 0;
      for (std::uint32_t l = 0; l < n_; ++l) acc = f.add(acc, f.mul(at(i, l), o.at(l, j)));
      r.set(i, j, acc);
    }
  }
  return r;
}

MatF MatF::scaled(std::uint32_t lambda) const {
  MatF r(n_, *ctx_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = ctx_->mul(e_[t], lambda);
  return r;
}

MatF MatF::negated() const {
  MatF r(n_, *ctx_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = ctx_->neg(e_[t]);
  return r;
}

std::uint32_t det_entries(std::span<const std::uint32_t> e, std::uint32_t n,
                          const FieldCtx& f) {
  if (n == 1) return e[0];
  if (n == 2) return f.sub(f.mul(e[0], e[3]), f.mul(e[1], e[2]));
  if (n == 3) {
    std::uint32_t a = f.mul(e[0], f.sub(f.mul(e[4], e[8]), f.mul(e[5], e[7])));
    std::uint32_t b = f.mul(e[1], f.sub(f.mul(e[3], e[8]), f.mul(e[5], e[6])));
    std::uint32_t c = f.mul(e[2], f.sub(f.mul(e[3], e[7]), f.mul(e[4], e[6])));
    return f.add(f.sub(a, b), c);
  }
  // general elimination on a scratch copy
  std::vector<std::uint32_t> a(e.begin(), e.end());
  bool negate = false;
  std::uint32_t det = f.one();
  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::uint32_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      negate = !negate;
    }
    const std::uint32_t pivot = a[c * n + c];
    det = f.mul(det, pivot);
    const std::uint32_t pinv = f.inv(pivot);
    for (std::uint32_t i = c + 1; i < n; ++i) {
      std::uint32_t factor = f.mul(a[i * n + c], pinv);
      if (factor == 0) continue;
      for (std::uint32_t j = c; j < n; ++j) {
        a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
      }
    }
  }
  return negate ? f.neg(det) : det;
}

Felt det(const MatF& m) {
  return Felt(det_entries(m.entries(), m.n(), m.ctx()), m.ctx());
}

unsigned rank(const MatF& m) {
  const FieldCtx& f = m.ctx();
  const std::uint32_t n = m.n();
  std::vector<std::uint32_t> a(m.entries().begin(), m.entries().end());
  unsigned r = 0;
  for (std::uint32_t c = 0; c < n && r < n; ++c) {
    std::uint32_t piv = r;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != r) {
      for (std::uint32_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[r * n + j]);
    }
    const std::uint32_t pinv = f.inv(a[r * n + c]);
    for (std::uint32_t i = r + 1; i < n; ++i) {
      std::uint32_t factor = f.mul(a[i * n + c], pinv);
      if (factor == 0) continue;
      for (std::uint32_t j = c; j < n; ++j) {
        a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[r * n + j]));
      }
    }
    ++r;
  }
  return r;
}

MatF inverse(const MatF& m) {
  const FieldCtx& f = m.ctx();
  const std::uint32_t n = m.n();
  // Gauss-Jordan on [A | I]
  std::vector<std::uint32_t> a(m.entries().begin(), m.entries().end());
  MatF out = MatF::identity(n, f);
  std::vector<std::uint32_t> b(out.entries().begin(), out.entries().end());
  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) throw SingularError();
    if (piv != c) {
      for (std::uint32_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[c * n + j]);
        std::swap(b[piv * n + j], b[c * n + j]);
      }
    }
    const std::uint32_t pinv = f.inv(a[c * n + c]);
    for (std::uint32_t j = 0; j < n; ++j) {
      a[c * n + j] = f.mul(a[c * n + j], pinv);
      b[c * n + j] = f.mul(b[c * n + j], pinv);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i == c || a[i * n + c] == 0) continue;
      const std::uint32_t factor = a[i * n + c];
      for (std::uint32_t j = 0; j < n; ++j) {
        a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
        b[i * n + j] = f.sub(b[i * n + j], f.mul(factor, b[c * n + j]));
      }
    }
  }
  return MatF::from_entries(n, f, std::move(b));
}

Felt dot(const MatF& u, const MatF& x) {
  const FieldCtx& f = common_ctx(u, x);
  std::uint32_t acc = 0;
  auto ue = u.entries();
  auto xe = x.entries();
  for (std::size_t t = 0; t < ue.size(); ++t) acc = f.add(acc, f.mul(ue[t], xe[t]));
  return Felt(acc, f);
}

bigint space_cardinality(std::uint32_t n, const FieldCtx& f) {
  return boost::multiprecision::pow(bigint(f.q()), n * n);
}

std::uint64_t checked_space_size(std::uint32_t n, const FieldCtx& f, std::uint64_t cap) {
  bigint total = space_cardinality(n, f);
  if (total > cap) {
    throw CapExceededError("enumeration needs " + total.str() + " scanned matrices, cap is " +
                           std::to_string(cap));
  }
  return total.convert_to<std::uint64_t>();
}

namespace {

bool in_space(Space space, std::uint32_t d, std::uint32_t one) {
  switch (space) {
    case Space::All: return true;
    case Space::GL: return d != 0;
    case Space::SL: return d == one;
    case Space::Singular: return d == 0;
  }
  return false;
}

}  // namespace

void scan_space(Space space, std::uint32_t n, const FieldCtx& f, std::uint64_t lo,
                std::uint64_t hi,
                const std::function<void(std::uint64_t, std::span<const std::uint32_t>)>& fn) {
  const std::uint32_t m = n * n;
  const std::uint32_t q = f.q();
  const std::uint32_t one = f.one();
  std::vector<std::uint32_t> e(m);
  std::uint64_t rest = lo;
  for (std::uint32_t t = 0; t < m; ++t) {
    e[t] = static_cast<std::uint32_t>(rest % q);
    rest /= q;
  }
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (in_space(space, det_entries(e, n, f), one)) fn(idx, e);
    // odometer increment, first entry fastest
    for (std::uint32_t t = 0; t < m; ++t) {
      if (++e[t] < q) break;
      e[t] = 0;
    }
  }
}

std::vector<MatF> enumerate(Space space, std::uint32_t n, const FieldCtx& f, const Caps& caps) {
  require_dim(n, caps.scalar_diag);
  std::uint64_t total = checked_space_size(n, f, caps.scan_cap);
  std::vector<MatF> out;
  scan_space(space, n, f, 0, total,
             [&](std::uint64_t, std::span<const std::uint32_t> e) {
               out.push_back(MatF::from_entries(n, f, std::vector<std::uint32_t>(e.begin(), e.end())));
             });
  return out;
}

bigint gl_order(std::uint32_t n, const bigint& q) {
  bigint r = boost::multiprecision::pow(q, static_cast<unsigned>(n * (n - 1) / 2));
  for (std::uint32_t j = 1; j <= n; ++j) {
    r *= boost::multiprecision::pow(q, j) - 1;
  }
  return r;
}

bigint sl_order(std::uint32_t n, const bigint& q) { return gl_order(n, q) / (q - 1); }

bigint z_order(std::uint32_t n, const bigint& q) {
  return boost::multiprecision::pow(q, n * n) - gl_order(n, q);
}

bigint rank_count_closed_form(std::uint32_t n, std::uint32_t r, const bigint& q) {
  // (number of r-dim subspaces chosen for row and column space) x |GL_r|:
  // qbinom(n, r)^2 * prod_{i=0}^{r-1} (q^r - q^i)
  bigint qb = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    qb *= boost::multiprecision::pow(q, n - i) - 1;
    qb /= boost::multiprecision::pow(q, i + 1) - 1;
  }
  bigint glr = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    glr *= boost::multiprecision::pow(q, r) - boost::multiprecision::pow(q, i);
  }
  return qb * qb * glr;
}

RankProfile rank_profile(std::uint32_t n, const FieldCtx& f, const Caps& caps) {
  require_dim(n, caps.scalar_diag);
  std::uint64_t total = checked_space_size(n, f, caps.scan_cap);
  std::vector<std::uint64_t> counts(n + 1, 0);
  scan_space(Space::All, n, f, 0, total,
             [&](std::uint64_t, std::span<const std::uint32_t> e) {
               MatF m = MatF::from_entries(n, f, std::vector<std::uint32_t>(e.begin(), e.end()));
               counts[rank(m)]++;
             });
  RankProfile prof;
  const bigint q = f.q();
  for (std::uint32_t r = 0; r <= n; ++r) {
    prof.counts.emplace_back(counts[r]);
    prof.closed_form.push_back(rank_count_closed_form(n, r, q));
  }
  return prof;
}

}  // namespace matring
