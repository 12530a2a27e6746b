#include "matring/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "matring/kernels.hpp"
#include "matring/parallel.hpp"
#include "matring/rng.hpp"

namespace matring {

MatrixSet MatrixSet::full(std::uint32_t n, const FieldCtx& f, const Caps& caps) {
  require_dim(n, caps.scalar_diag);
  const std::uint64_t total = checked_space_size(n, f, caps.scan_cap);
  MatrixSet s(n, f);
  s.indices_.resize(total);
  for (std::uint64_t i = 0; i < total; ++i) s.indices_[i] = i;
  s.prov_.kind = SetProvenance::Kind::Full;
  return s;
}

MatrixSet MatrixSet::random(std::uint32_t n, const FieldCtx& f, std::uint64_t seed,
                            std::uint64_t size, const Caps& caps) {
  require_dim(n, caps.scalar_diag);
  const std::uint64_t total = checked_space_size(n, f, caps.scan_cap);
  if (size > total) {
    throw ConfigError("random set size " + std::to_string(size) + " exceeds q^(n^2) = " +
                      std::to_string(total));
  }
  MatrixSet s(n, f);
  SplitMix64 rng(seed);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(size * 2);
  while (seen.size() < size) seen.insert(rng.below(total));
  s.indices_.assign(seen.begin(), seen.end());
  std::sort(s.indices_.begin(), s.indices_.end());
  s.prov_.kind = SetProvenance::Kind::Random;
  s.prov_.seed = seed;
  s.prov_.size = size;
  return s;
}

MatrixSet MatrixSet::explicit_set(std::uint32_t n, const FieldCtx& f, std::vector<MatF> members,
                                  std::string source) {
  require_dim(n);
  MatrixSet s(n, f);
  for (const MatF& m : members) {
    if (m.n() != n || !m.ctx().same(f)) throw CtxMismatchError();
    s.indices_.push_back(m.index());
  }
  std::sort(s.indices_.begin(), s.indices_.end());
  s.indices_.erase(std::unique(s.indices_.begin(), s.indices_.end()), s.indices_.end());
  if (s.indices_.empty()) throw ConfigError("matrix set must be nonempty");
  s.prov_.kind = SetProvenance::Kind::Explicit;
  s.prov_.source = std::move(source);
  return s;
}

MatrixSet MatrixSet::product_of_entries(std::uint32_t n, const FieldCtx& f,
                                        std::vector<std::uint32_t> entries, const Caps& caps) {
  require_dim(n, caps.scalar_diag);
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  if (entries.empty()) throw ConfigError("entry pool must be nonempty");
  for (std::uint32_t e : entries) {
    if (e >= f.q()) throw ConfigError("entry index " + std::to_string(e) + " outside field");
  }
  const std::uint32_t m = n * n;
  std::uint64_t count = 1;
  for (std::uint32_t t = 0; t < m; ++t) {
    count *= entries.size();
    if (count > caps.scan_cap) {
      throw CapExceededError("entry-product set needs " + std::to_string(count) +
                             "+ members, cap is " + std::to_string(caps.scan_cap));
    }
  }
  MatrixSet s(n, f);
  s.indices_.reserve(count);
  std::vector<std::uint32_t> pick(m, 0);  // odometer over entry positions
  const std::uint64_t q = f.q();
  for (;;) {
    std::uint64_t idx = 0;
    for (std::uint32_t t = m; t-- > 0;) idx = idx * q + entries[pick[t]];
    s.indices_.push_back(idx);
    std::uint32_t t = 0;
    while (t < m && ++pick[t] == entries.size()) pick[t++] = 0;
    if (t == m) break;
  }
  std::sort(s.indices_.begin(), s.indices_.end());
  s.prov_.kind = SetProvenance::Kind::ProductOfEntries;
  s.prov_.entry_pool = std::move(entries);
  return s;
}

MatrixSet MatrixSet::translated(const MatF& g) const {
  std::vector<MatF> shifted;
  shifted.reserve(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) shifted.push_back(member(i) + g);
  MatrixSet s = explicit_set(n_, *ctx_, std::move(shifted));
  return s;
}

std::vector<std::uint8_t> det_class_table(std::uint32_t n, const FieldCtx& f, const Caps& caps) {
  const std::uint64_t total = checked_space_size(n, f, caps.scan_cap);
  std::vector<std::uint8_t> cls(total, 0);
  const std::uint32_t one = f.one();
  scan_space(Space::All, n, f, 0, total, [&](std::uint64_t idx, std::span<const std::uint32_t> e) {
    const std::uint32_t d = det_entries(e, n, f);
    cls[idx] = d == 0 ? 1 : (d == one ? 2 : 0);
  });
  return cls;
}

namespace {

void check_compatible(const MatrixSet& a, const MatrixSet& b) {
  if (a.n() != b.n() || !a.ctx().same(b.ctx())) throw CtxMismatchError();
}

void check_pair_cap(const MatrixSet& a, const MatrixSet& b, const Caps& caps) {
  unsigned __int128 pairs = static_cast<unsigned __int128>(a.size()) * b.size();
  if (pairs > caps.pair_cap) {
    throw CapExceededError("pair scan needs " + std::to_string(a.size()) + " x " +
                           std::to_string(b.size()) + " pairs, cap is " +
                           std::to_string(caps.pair_cap));
  }
}

// rows and (when the field allows it) planes of a set's members
struct SetLayout {
  std::uint32_t m = 0;
  std::vector<std::uint32_t> rows;
  std::vector<std::vector<std::uint16_t>> planes;
  std::vector<std::uint32_t> powq;

  SetLayout(const MatrixSet& s, const Caps&) {
    const FieldCtx& f = s.ctx();
    m = s.n() * s.n();
    rows.resize(s.size() * m);
    const std::uint64_t q = f.q();
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::uint64_t idx = s.indices()[i];
      for (std::uint32_t t = 0; t < m; ++t) {
        rows[i * m + t] = static_cast<std::uint32_t>(idx % q);
        idx /= q;
      }
    }
    bigint total = space_cardinality(s.n(), f);
    if (f.k() == 1 && kernels::fits(m, f.p()) && total < (bigint(1) << 31)) {
      planes.assign(m, std::vector<std::uint16_t>(s.size()));
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::uint32_t t = 0; t < m; ++t) {
          planes[t][i] = static_cast<std::uint16_t>(rows[i * m + t]);
        }
      }
      powq.resize(m);
      std::uint32_t pw = 1;
      for (std::uint32_t t = 0; t < m; ++t) {
        powq[t] = pw;
        pw = static_cast<std::uint32_t>(pw * q);
      }
    }
  }
};

// per-A-member pass: apply fn(sum_index) for every b
template <class Fn>
void for_each_pair_sum(const FieldCtx& f, const SetLayout& la, std::size_t ai,
                       const SetLayout& lb, std::size_t b_count, Fn&& fn) {
  const std::uint32_t m = la.m;
  const std::uint32_t* arow = la.rows.data() + ai * m;
  if (!lb.planes.empty()) {
    constexpr std::size_t kChunk = 4096;
    std::uint32_t idx[kChunk];
    const auto& backend = kernels::active();
    std::vector<const std::uint16_t*> shifted(m);
    for (std::size_t base = 0; base < b_count; base += kChunk) {
      const std::size_t len = std::min(kChunk, b_count - base);
      for (std::uint32_t t = 0; t < m; ++t) shifted[t] = lb.planes[t].data() + base;
      backend.pair_sum_indices(shifted.data(), m, arow, lb.powq.data(), len, f.p(), idx);
      for (std::size_t i = 0; i < len; ++i) fn(idx[i]);
    }
    return;
  }
  const std::uint64_t q = f.q();
  for (std::size_t bi = 0; bi < b_count; ++bi) {
    const std::uint32_t* brow = lb.rows.data() + bi * m;
    std::uint64_t idx = 0;
    for (std::uint32_t t = m; t-- > 0;) idx = idx * q + f.add(arow[t], brow[t]);
    fn(idx);
  }
}

std::uint64_t count_sums_with_class(const MatrixSet& a, const MatrixSet& b, std::uint8_t target,
                                    const Caps& caps, bool distinct_sums) {
  check_compatible(a, b);
  check_pair_cap(a, b, caps);
  const FieldCtx& f = a.ctx();
  const std::vector<std::uint8_t> cls = det_class_table(a.n(), f, caps);
  const SetLayout la(a, caps), lb(b, caps);

  if (distinct_sums) {
    std::vector<std::uint8_t> seen(cls.size(), 0);
    for (std::size_t ai = 0; ai < a.size(); ++ai) {
      for_each_pair_sum(f, la, ai, lb, b.size(), [&](std::uint64_t idx) { seen[idx] = 1; });
    }
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) out += (seen[i] && cls[i] == target) ? 1 : 0;
    return out;
  }

  auto parts = map_ranges<std::uint64_t>(
      a.size(), caps.workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        for (std::uint64_t ai = lo; ai < hi; ++ai) {
          for_each_pair_sum(f, la, ai, lb, b.size(),
                            [&](std::uint64_t idx) { cnt += cls[idx] == target; });
        }
        return cnt;
      });
  std::uint64_t total = 0;
  for (std::uint64_t c : parts) total += c;
  return total;
}

}  // namespace

std::uint64_t count_singular_sums(const MatrixSet& a, const MatrixSet& b, const Caps& caps,
                                  bool distinct_sums) {
  return count_sums_with_class(a, b, 1, caps, distinct_sums);
}

std::uint64_t count_sl_sums(const MatrixSet& a, const MatrixSet& b, const Caps& caps,
                            bool distinct_sums) {
  return count_sums_with_class(a, b, 2, caps, distinct_sums);
}

std::vector<std::uint64_t> sum_multiplicity_table(const MatrixSet& a, const MatrixSet& b,
                                                  const Caps& caps) {
  check_compatible(a, b);
  check_pair_cap(a, b, caps);
  const FieldCtx& f = a.ctx();
  bigint total = space_cardinality(a.n(), f);
  if (total > caps.table_cap) {
    throw CapExceededError("sum-multiplicity table needs " + total.str() +
                           " entries, cap is " + std::to_string(caps.table_cap));
  }
  std::vector<std::uint64_t> table(total.convert_to<std::uint64_t>(), 0);
  const SetLayout la(a, caps), lb(b, caps);
  for (std::size_t ai = 0; ai < a.size(); ++ai) {
    for_each_pair_sum(f, la, ai, lb, b.size(), [&](std::uint64_t idx) { table[idx]++; });
  }
  return table;
}

bigint count_sumproduct(const MatrixSet& a, const MatrixSet& b, const MatrixSet& c,
                        const MatrixSet& d, const MatF& h, const Caps& caps) {
  check_compatible(a, b);
  check_compatible(c, d);
  check_compatible(a, c);
  const FieldCtx& f = a.ctx();
  if (h.n() != a.n() || !h.ctx().same(f)) throw CtxMismatchError();
  if (det(h).is_zero()) throw SingularError("H in the sum-product count must be invertible");

  const std::vector<std::uint64_t> tab_ab = sum_multiplicity_table(a, b, caps);
  const std::vector<std::uint64_t> tab_cd = sum_multiplicity_table(c, d, caps);

  const std::uint32_t n = a.n();
  const std::uint64_t total = tab_ab.size();
  unsigned __int128 acc = 0;
  // (A+B)(C+D) = H pairs each invertible sum X = A+B with C+D = X^{-1} H
  scan_space(Space::GL, n, f, 0, total, [&](std::uint64_t idx, std::span<const std::uint32_t> e) {
    if (tab_ab[idx] == 0) return;
    MatF x = MatF::from_entries(n, f, std::vector<std::uint32_t>(e.begin(), e.end()));
    MatF y = inverse(x) * h;
    acc += static_cast<unsigned __int128>(tab_ab[idx]) * tab_cd[y.index()];
  });
  bigint out = static_cast<std::uint64_t>(acc >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(acc);
  return out;
}

GapReport gap_report(GapKind kind, const std::vector<const MatrixSet*>& sets, const MatF* h,
                     const Caps& caps) {
  if (sets.empty()) throw ConfigError("gap report needs input sets");
  const MatrixSet& a = *sets[0];
  const FieldCtx& f = a.ctx();
  const std::uint32_t n = a.n();
  GapReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.p = f.p();
  rep.k = f.k();
  rep.q = f.q();
  for (const MatrixSet* s : sets) rep.set_sizes.push_back(s->size());

  const bigint q = f.q();
  const bigint space = boost::multiprecision::pow(q, n * n);
  const double nn = static_cast<double>(n) * n;
  double size_prod = 1;
  for (const MatrixSet* s : sets) size_prod *= static_cast<double>(s->size());

  switch (kind) {
    case GapKind::N: {
      if (sets.size() != 2) throw ConfigError("N takes two sets");
      rep.observed = count_singular_sums(a, *sets[1], caps);
      rep.main_term = bigrat(z_order(n, q) * a.size() * sets[1]->size(), space);
      rep.envelope = std::pow(static_cast<double>(f.q()), nn - 2.5) * std::sqrt(size_prod);
      break;
    }
    case GapKind::T: {
      if (sets.size() != 2) throw ConfigError("T takes two sets");
      rep.observed = count_sl_sums(a, *sets[1], caps);
      rep.main_term = bigrat(sl_order(n, q) * a.size() * sets[1]->size(), space);
      rep.envelope = std::pow(static_cast<double>(f.q()), nn - 2.0) * std::sqrt(size_prod);
      break;
    }
    case GapKind::R: {
      if (sets.size() != 4 || h == nullptr) throw ConfigError("R takes four sets and H");
      rep.observed = count_sumproduct(a, *sets[1], *sets[2], *sets[3], *h, caps);
      bigint prod = 1;
      for (const MatrixSet* s : sets) prod *= s->size();
      rep.main_term = bigrat(prod, space);
      rep.envelope = std::pow(static_cast<double>(f.q()), nn - 0.5) * std::sqrt(size_prod);
      break;
    }
  }
  bigrat obs(rep.observed);
  rep.gap = obs >= rep.main_term ? obs - rep.main_term : rep.main_term - obs;
  rep.ratio = rep.gap.convert_to<double>() / rep.envelope;
  return rep;
}

AsymTable asymptotic_table(GapKind kind, std::uint32_t n,
                           const std::vector<std::pair<std::uint32_t, std::uint32_t>>& fields,
                           const std::string& rule, std::uint64_t seed, const Caps& caps) {
  if (kind == GapKind::R) throw ConfigError("asymptotic table covers N and T only");
  AsymTable table;
  table.kind = kind;
  table.n = n;
  table.rule = rule;
  table.seed = seed;

  double exp = 0;
  bool full = rule == "full";
  if (!full) {
    if (rule.rfind("rand:", 0) != 0) throw ConfigError("rule must be 'full' or 'rand:<exp>'");
    exp = std::stod(rule.substr(5));
  }

  for (auto [p, k] : fields) {
    FieldCtx f = FieldCtx::make(p, k);
    AsymRow row;
    row.p = p;
    row.k = k;
    row.q = f.q();
    MatrixSet a = full ? MatrixSet::full(n, f, caps)
                       : MatrixSet::random(n, f, seed + f.q(),
                                           std::min<std::uint64_t>(
                                               checked_space_size(n, f, caps.scan_cap),
                                               std::max<std::uint64_t>(
                                                   1, static_cast<std::uint64_t>(
                                                          std::llround(std::pow(f.q(), exp))))),
                                           caps);
    MatrixSet b = full ? MatrixSet::full(n, f, caps)
                       : MatrixSet::random(n, f, seed + f.q() + 1, a.size(), caps);
    row.size_a = a.size();
    row.size_b = b.size();
    row.observed = kind == GapKind::N ? count_singular_sums(a, b, caps)
                                      : count_sl_sums(a, b, caps);
    row.ratio = static_cast<double>(f.q()) * row.observed.convert_to<double>() /
                (static_cast<double>(row.size_a) * static_cast<double>(row.size_b));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace matring
