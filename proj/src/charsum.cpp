#include "matring/charsum.hpp"

#include <cmath>
#include <numbers>

#include "matring/kernels.hpp"
#include "matring/parallel.hpp"
#include "matring/rng.hpp"

namespace matring {

void CharAccum::merge(const CharAccum& o) {
  if (p != o.p) throw CtxMismatchError();
  for (std::uint32_t a = 0; a < p; ++a) counts[a] += o.counts[a];
}

std::uint64_t CharAccum::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts) t += c;
  return t;
}

std::complex<double> CharAccum::value() const {
  std::complex<double> v = 0;
  for (std::uint32_t a = 0; a < p; ++a) {
    if (counts[a] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * a / p;
    v += static_cast<double>(counts[a]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return v;
}

CharAccum CharAccum::conjugated() const {
  CharAccum out(p);
  for (std::uint32_t a = 0; a < p; ++a) out.counts[a == 0 ? 0 : p - a] = counts[a];
  return out;
}

MatListSoA MatListSoA::collect(Space space, std::uint32_t n, const FieldCtx& f,
                               const Caps& caps, bool with_inverses) {
  require_dim(n, caps.scalar_diag);
  MatListSoA out;
  out.n_ = n;
  out.m_ = n * n;
  out.ctx_ = &f;
  const std::uint64_t total = checked_space_size(n, f, caps.scan_cap);
  scan_space(space, n, f, 0, total, [&](std::uint64_t, std::span<const std::uint32_t> e) {
    out.rows_.insert(out.rows_.end(), e.begin(), e.end());
  });
  out.count_ = out.rows_.size() / out.m_;
  if (with_inverses) {
    out.inv_rows_.reserve(out.rows_.size());
    for (std::size_t i = 0; i < out.count_; ++i) {
      MatF x = MatF::from_entries(n, f, std::vector<std::uint32_t>(out.row(i).begin(),
                                                                   out.row(i).end()));
      MatF xi = inverse(x);
      out.inv_rows_.insert(out.inv_rows_.end(), xi.entries().begin(), xi.entries().end());
    }
  }
  out.build_planes();
  return out;
}

MatListSoA MatListSoA::from_rows(std::uint32_t n, const FieldCtx& f,
                                 std::vector<std::uint32_t> rows) {
  MatListSoA out;
  out.n_ = n;
  out.m_ = n * n;
  out.ctx_ = &f;
  out.rows_ = std::move(rows);
  out.count_ = out.rows_.size() / out.m_;
  out.build_planes();
  return out;
}

void MatListSoA::build_planes() {
  if (ctx_->k() != 1 || !kernels::fits(2 * m_, ctx_->p())) return;
  planes_.assign(m_, std::vector<std::uint16_t>(count_));
  for (std::size_t i = 0; i < count_; ++i) {
    for (std::uint32_t t = 0; t < m_; ++t) {
      planes_[t][i] = static_cast<std::uint16_t>(rows_[i * m_ + t]);
    }
  }
}

namespace {

// generic row path: arg of psi at U.X
inline std::uint32_t arg_of(const FieldCtx& f, std::span<const std::uint32_t> u,
                            std::span<const std::uint32_t> x) {
  std::uint32_t acc = 0;
  for (std::size_t t = 0; t < u.size(); ++t) acc = f.add(acc, f.mul(u[t], x[t]));
  return f.trace(acc);
}

CharAccum hist_over_range(const MatListSoA& dom, const std::uint16_t* const* planes,
                          std::uint32_t m, const std::uint32_t* weights,
                          std::uint64_t lo, std::uint64_t hi) {
  const FieldCtx& f = dom.ctx();
  CharAccum acc(f.p());
  constexpr std::size_t kChunk = 4096;
  std::uint16_t args[kChunk];
  const auto& backend = kernels::active();
  std::vector<const std::uint16_t*> shifted(m);
  for (std::uint64_t base = lo; base < hi; base += kChunk) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, hi - base));
    for (std::uint32_t t = 0; t < m; ++t) shifted[t] = planes[t] + base;
    backend.weighted_args(shifted.data(), m, weights, len, f.p(), args);
    kernels::histogram_args(args, len, acc.counts.data());
  }
  return acc;
}

}  // namespace

CharAccum charsum_over(const MatListSoA& dom, const MatF& u, const Caps& caps) {
  const FieldCtx& f = dom.ctx();
  if (!u.ctx().same(f) || u.n() != dom.n()) throw CtxMismatchError();
  const std::uint32_t m = dom.m();

  if (dom.has_planes()) {
    std::vector<const std::uint16_t*> planes(m);
    std::vector<std::uint32_t> weights(m);
    for (std::uint32_t t = 0; t < m; ++t) {
      planes[t] = dom.plane(t);
      weights[t] = u.entries()[t];
    }
    auto parts = map_ranges<CharAccum>(dom.count(), caps.workers,
                                       [&](std::uint64_t lo, std::uint64_t hi) {
                                         return hist_over_range(dom, planes.data(), m,
                                                                weights.data(), lo, hi);
                                       });
    CharAccum acc(f.p());
    for (auto& part : parts) acc.merge(part);
    return acc;
  }

  auto parts = map_ranges<CharAccum>(dom.count(), caps.workers,
                                     [&](std::uint64_t lo, std::uint64_t hi) {
                                       CharAccum acc(f.p());
                                       for (std::uint64_t i = lo; i < hi; ++i) {
                                         acc.add(arg_of(f, u.entries(), dom.row(i)));
                                       }
                                       return acc;
                                     });
  CharAccum acc(f.p());
  for (auto& part : parts) acc.merge(part);
  return acc;
}

CharAccum sum_singular(const MatF& u, const Caps& caps) {
  MatListSoA dom = MatListSoA::collect(Space::Singular, u.n(), u.ctx(), caps);
  return charsum_over(dom, u, caps);
}

CharAccum sum_sl(const MatF& u, const Caps& caps) {
  MatListSoA dom = MatListSoA::collect(Space::SL, u.n(), u.ctx(), caps);
  return charsum_over(dom, u, caps);
}

CharAccum kloosterman_over(const MatListSoA& gl_dom, const MatF& u, const MatF& v,
                           const MatF& h, const Caps& caps) {
  const FieldCtx& f = gl_dom.ctx();
  if (!u.ctx().same(f) || !v.ctx().same(f) || !h.ctx().same(f)) throw CtxMismatchError();
  if (det(h).is_zero()) throw SingularError("H in the Kloosterman sum must be invertible");
  const std::uint32_t n = gl_dom.n();
  const std::uint32_t m = gl_dom.m();

  // entries of H X^{-1} per member
  std::vector<std::uint32_t> yrows(gl_dom.count() * m);
  for (std::size_t i = 0; i < gl_dom.count(); ++i) {
    auto xi = gl_dom.inv_row(i);
    for (std::uint32_t r = 0; r < n; ++r) {
      for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t acc = 0;
        for (std::uint32_t l = 0; l < n; ++l) {
          acc = f.add(acc, f.mul(h.at(r, l), xi[l * n + c]));
        }
        yrows[i * m + r * n + c] = acc;
      }
    }
  }

  if (gl_dom.has_planes()) {
    MatListSoA ydom = MatListSoA::from_rows(n, f, std::move(yrows));
    std::vector<const std::uint16_t*> planes(2 * m);
    std::vector<std::uint32_t> weights(2 * m);
    for (std::uint32_t t = 0; t < m; ++t) {
      planes[t] = gl_dom.plane(t);
      planes[m + t] = ydom.plane(t);
      weights[t] = u.entries()[t];
      weights[m + t] = v.entries()[t];
    }
    auto parts = map_ranges<CharAccum>(gl_dom.count(), caps.workers,
                                       [&](std::uint64_t lo, std::uint64_t hi) {
                                         return hist_over_range(gl_dom, planes.data(), 2 * m,
                                                                weights.data(), lo, hi);
                                       });
    CharAccum acc(f.p());
    for (auto& part : parts) acc.merge(part);
    return acc;
  }

  auto parts = map_ranges<CharAccum>(
      gl_dom.count(), caps.workers, [&](std::uint64_t lo, std::uint64_t hi) {
        CharAccum acc(f.p());
        for (std::uint64_t i = lo; i < hi; ++i) {
          std::uint32_t a = arg_of(f, u.entries(), gl_dom.row(i));
          std::uint32_t b = arg_of(f, v.entries(), {yrows.data() + i * m, m});
          acc.add((a + b) % f.p());
        }
        return acc;
      });
  CharAccum acc(f.p());
  for (auto& part : parts) acc.merge(part);
  return acc;
}

CharAccum kloosterman(const MatF& u, const MatF& v, const MatF& h, const Caps& caps) {
  MatListSoA dom = MatListSoA::collect(Space::GL, u.n(), u.ctx(), caps, /*with_inverses=*/true);
  return kloosterman_over(dom, u, v, h, caps);
}

std::pair<std::int64_t, std::int64_t> envelope_exponent(SumKind kind, std::uint32_t n) {
  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  switch (kind) {
    case SumKind::Singular: return {2 * nn - 5, 2};
    case SumKind::SL: return {nn - 2, 1};
    case SumKind::Kloosterman: return {2 * nn - 1, 2};
  }
  return {0, 1};
}

namespace {

std::string exponent_string(std::pair<std::int64_t, std::int64_t> e) {
  if (e.second == 1) return std::to_string(e.first);
  return std::to_string(e.first) + "/" + std::to_string(e.second);
}

MatF random_gl(std::uint32_t n, const FieldCtx& f, std::uint64_t space, SplitMix64& rng) {
  for (;;) {
    MatF h = MatF::from_index(n, f, rng.below(space));
    if (!det(h).is_zero()) return h;
  }
}

}  // namespace

BoundReport bound_survey(SumKind kind, std::uint32_t n, const FieldCtx& f,
                         const ScanSpec& scan, const Caps& caps) {
  require_dim(n, caps.scalar_diag);
  const std::uint64_t space = checked_space_size(n, f, caps.scan_cap);

  const bool is_k = kind == SumKind::Kloosterman;
  MatListSoA dom = MatListSoA::collect(is_k ? Space::GL
                                            : (kind == SumKind::Singular ? Space::Singular
                                                                         : Space::SL),
                                       n, f, caps, /*with_inverses=*/is_k);

  BoundReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.p = f.p();
  rep.k = f.k();
  rep.q = f.q();
  rep.scan = scan;
  auto expo = envelope_exponent(kind, n);
  rep.envelope_exponent = exponent_string(expo);
  rep.exponent_value = static_cast<double>(expo.first) / static_cast<double>(expo.second);

  auto consider = [&](double modulus, std::vector<MatF> witness) {
    ++rep.scanned;
    if (rep.witness.empty() || modulus > rep.observed_max) {
      rep.observed_max = modulus;
      rep.witness = std::move(witness);
    }
  };

  if (scan.mode == ScanSpec::Mode::Exhaustive) {
    if (!is_k) {
      const std::uint64_t tuples = space - 1;
      if (tuples > caps.tuple_cap) {
        throw CapExceededError("exhaustive survey needs " + std::to_string(tuples) +
                               " tuples, cap is " + std::to_string(caps.tuple_cap));
      }
      for (std::uint64_t ui = 1; ui < space; ++ui) {
        MatF u = MatF::from_index(n, f, ui);
        consider(charsum_over(dom, u, caps).modulus(), {u});
      }
    } else {
      SplitMix64 rng(scan.seed);
      std::vector<MatF> hs;
      hs.push_back(MatF::identity(n, f));
      for (std::uint32_t i = 1; i < scan.h_count; ++i) hs.push_back(random_gl(n, f, space, rng));
      const std::uint64_t pairs = space * space - 1;
      if (pairs * hs.size() > caps.tuple_cap) {
        throw CapExceededError("exhaustive Kloosterman survey needs " +
                               std::to_string(pairs * hs.size()) + " tuples, cap is " +
                               std::to_string(caps.tuple_cap));
      }
      for (const MatF& h : hs) {
        for (std::uint64_t ui = 0; ui < space; ++ui) {
          for (std::uint64_t vi = 0; vi < space; ++vi) {
            if (ui == 0 && vi == 0) continue;
            MatF u = MatF::from_index(n, f, ui);
            MatF v = MatF::from_index(n, f, vi);
            consider(kloosterman_over(dom, u, v, h, caps).modulus(), {u, v, h});
          }
        }
      }
    }
  } else {
    SplitMix64 rng(scan.seed);
    for (std::uint64_t s = 0; s < scan.samples; ++s) {
      if (!is_k) {
        MatF u = MatF::from_index(n, f, 1 + rng.below(space - 1));
        consider(charsum_over(dom, u, caps).modulus(), {u});
      } else {
        std::uint64_t ui = 0, vi = 0;
        do {
          ui = rng.below(space);
          vi = rng.below(space);
        } while (ui == 0 && vi == 0);
        MatF u = MatF::from_index(n, f, ui);
        MatF v = MatF::from_index(n, f, vi);
        MatF h = random_gl(n, f, space, rng);
        consider(kloosterman_over(dom, u, v, h, caps).modulus(), {u, v, h});
      }
    }
  }

  rep.implied_constant = rep.observed_max / std::pow(static_cast<double>(f.q()), rep.exponent_value);
  return rep;
}

}  // namespace matring
