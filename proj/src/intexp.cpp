#include "matring/intexp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "matring/parallel.hpp"
#include "matring/primes.hpp"
#include "matring/rng.hpp"
#include "matring/sumset.hpp"

namespace matring {

IntSet IntSet::range(std::uint64_t N) {
  if (N == 0) throw ConfigError("range upper bound must be positive");
  IntSet s;
  s.N = N;
  s.members.resize(N);
  for (std::uint64_t i = 0; i < N; ++i) s.members[i] = i + 1;
  return s;
}

IntSet IntSet::from_list(std::vector<std::uint64_t> values, std::uint64_t N) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) throw ConfigError("integer set must be nonempty");
  if (values.front() == 0) throw ConfigError("integer set members must be positive");
  IntSet s;
  s.N = N == 0 ? values.back() : N;
  if (values.back() > s.N) throw ConfigError("integer set member exceeds bound N");
  s.members = std::move(values);
  return s;
}

IntSet IntSet::random(std::uint64_t seed, std::uint64_t size, std::uint64_t N) {
  if (size == 0 || size > N) throw ConfigError("random set size must be in [1, N]");
  SplitMix64 rng(seed);
  std::unordered_set<std::uint64_t> seen;
  while (seen.size() < size) seen.insert(1 + rng.below(N));
  std::vector<std::uint64_t> v(seen.begin(), seen.end());
  std::sort(v.begin(), v.end());
  IntSet s;
  s.N = N;
  s.members = std::move(v);
  return s;
}

std::uint64_t nu_p(const IntSet& t, std::uint64_t p) {
  if (p < 2) throw ConfigError("modulus must be at least 2");
  std::set<std::uint64_t> res;
  for (std::uint64_t v : t.members) res.insert(v % p);
  return res.size();
}

std::uint64_t sigma_p(const IntSet& t, std::uint64_t p) {
  if (p < 2) throw ConfigError("modulus must be at least 2");
  std::map<std::uint64_t, std::uint64_t> mu;
  for (std::uint64_t v : t.members) mu[v % p]++;
  std::uint64_t acc = 0;
  for (auto& [u, m] : mu) acc += m * m;
  return acc;
}

ResClassCensus resclass_census(const IntSet& t, std::uint64_t Q) {
  if (Q < 2) throw ConfigError("census needs Q >= 2");
  if (t.N < 2) throw ConfigError("census needs N >= 2 (log N must be positive)");
  ResClassCensus census;
  census.N = t.N;
  census.Q = Q;
  const double logN = std::log(static_cast<double>(t.N));
  for (std::uint64_t p : primes_in(Q, 2 * Q)) {
    CensusRow row;
    row.p = p;
    row.nu = nu_p(t, p);
    row.threshold = static_cast<double>(p) / (20.0 * logN * std::log(static_cast<double>(p)));
    row.pass = static_cast<double>(row.nu) >= row.threshold;
    census.pass_count += row.pass ? 1 : 0;
    census.rows.push_back(row);
  }
  census.prime_count = census.rows.size();
  census.pass_fraction = census.prime_count == 0
                             ? 0.0
                             : static_cast<double>(census.pass_count) / census.prime_count;
  census.lemma_floor = 0.6 * static_cast<double>(Q) / std::log(static_cast<double>(Q));
  census.meets_lemma_floor = static_cast<double>(census.pass_count) >= census.lemma_floor;
  return census;
}

namespace {

// Sums A+B over M_n(R) x M_n(S) have independent entries, so the pair space
// factors: iterate distinct entry-sum matrices and weight each by the product
// of per-entry pair multiplicities.
struct SumEntryPool {
  std::vector<std::int64_t> values;  // distinct r+s
  std::vector<std::uint64_t> mult;   // pairs producing each value
};

SumEntryPool entry_sums(const IntSet& r, const IntSet& s) {
  std::map<std::int64_t, std::uint64_t> acc;
  for (std::uint64_t a : r.members) {
    for (std::uint64_t b : s.members) acc[static_cast<std::int64_t>(a + b)]++;
  }
  SumEntryPool pool;
  for (auto& [v, m] : acc) {
    pool.values.push_back(v);
    pool.mult.push_back(m);
  }
  return pool;
}

std::uint64_t checked_total_pairs(const IntSet& r, const IntSet& s, std::uint32_t n,
                                  const Caps& caps) {
  const std::uint32_t m = n * n;
  bigint total = boost::multiprecision::pow(bigint(r.size()), m) *
                 boost::multiprecision::pow(bigint(s.size()), m);
  if (total > caps.scan_cap) {
    throw CapExceededError("pair space has " + total.str() + " pairs, cap is " +
                           std::to_string(caps.scan_cap));
  }
  return total.convert_to<std::uint64_t>();
}

void check_det_bound(const IntSet& r, const IntSet& s, std::uint32_t n) {
  // |det| <= n! (2N)^n must fit comfortably in int64
  double nf = 1;
  for (std::uint32_t i = 2; i <= n; ++i) nf *= i;
  const double bound = nf * std::pow(2.0 * static_cast<double>(std::max(r.N, s.N)),
                                     static_cast<double>(n));
  if (bound >= 9.0e18) {
    throw SizeExceededError("determinant bound n!(2N)^n exceeds 64-bit range");
  }
}

std::int64_t det_int(const std::int64_t* e, std::uint32_t n) {
  switch (n) {
    case 1:
      return e[0];
    case 2:
      return e[0] * e[3] - e[1] * e[2];
    case 3:
      return e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
             e[2] * (e[3] * e[7] - e[4] * e[6]);
    default: {
      // first-row expansion into 3x3 cofactors
      std::int64_t acc = 0;
      std::int64_t minor[9];
      for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t t = 0;
        for (std::uint32_t i = 1; i < n; ++i) {
          for (std::uint32_t j = 0; j < n; ++j) {
            if (j == c) continue;
            minor[t++] = e[i * n + j];
          }
        }
        const std::int64_t cof = det_int(minor, n - 1);
        acc += (c % 2 == 0 ? 1 : -1) * e[c] * cof;
      }
      return acc;
    }
  }
}

std::uint64_t sum_matrix_count(const SumEntryPool& pool, std::uint32_t m) {
  std::uint64_t total = 1;
  for (std::uint32_t t = 0; t < m; ++t) total *= pool.values.size();
  return total;
}

// iterate the distinct sum matrices with linear index in [lo, hi);
// fn(det, pair multiplicity)
template <class Fn>
void for_each_sum_matrix(const SumEntryPool& pool, std::uint32_t n, std::uint64_t lo,
                         std::uint64_t hi, Fn&& fn) {
  const std::uint32_t m = n * n;
  const std::uint64_t base = pool.values.size();
  std::vector<std::uint32_t> pick(m);
  std::vector<std::int64_t> e(m);
  std::uint64_t rest = lo;
  for (std::uint32_t t = 0; t < m; ++t) {
    pick[t] = static_cast<std::uint32_t>(rest % base);
    e[t] = pool.values[pick[t]];
    rest /= base;
  }
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::uint64_t mult = 1;
    for (std::uint32_t t = 0; t < m; ++t) mult *= pool.mult[pick[t]];
    fn(det_int(e.data(), n), mult);
    for (std::uint32_t t = 0; t < m; ++t) {
      if (++pick[t] < base) {
        e[t] = pool.values[pick[t]];
        break;
      }
      pick[t] = 0;
      e[t] = pool.values[0];
    }
  }
}

}  // namespace

OmegaReport omega_w(const IntSet& r, const IntSet& s, std::uint32_t n, const Caps& caps) {
  require_dim(n, caps.scalar_diag);
  OmegaReport rep;
  rep.n = n;
  rep.total_pairs = checked_total_pairs(r, s, n, caps);
  check_det_bound(r, s, n);

  const SumEntryPool pool = entry_sums(r, s);
  struct Part {
    std::set<std::uint64_t> primes;
    std::uint64_t zero_pairs = 0;
  };
  auto parts = map_ranges<Part>(
      sum_matrix_count(pool, n * n), caps.workers, [&](std::uint64_t lo, std::uint64_t hi) {
        Part part;
        std::unordered_map<std::int64_t, std::vector<std::uint64_t>> factor_cache;
        for_each_sum_matrix(pool, n, lo, hi, [&](std::int64_t d, std::uint64_t mult) {
          if (d == 0) {
            part.zero_pairs += mult;
            return;
          }
          const std::int64_t key = d < 0 ? -d : d;
          auto it = factor_cache.find(key);
          if (it == factor_cache.end()) {
            it = factor_cache.emplace(key, distinct_prime_factors(key)).first;
          }
          part.primes.insert(it->second.begin(), it->second.end());
        });
        return part;
      });
  std::set<std::uint64_t> primes;
  for (Part& part : parts) {
    rep.zero_det_pairs += part.zero_pairs;
    primes.insert(part.primes.begin(), part.primes.end());
  }
  rep.primes.assign(primes.begin(), primes.end());
  rep.omega = rep.primes.size();
  return rep;
}

bool divides_w(const IntSet& r, const IntSet& s, std::uint32_t n, std::uint64_t p,
               const Caps& caps) {
  require_dim(n, caps.scalar_diag);
  if (!is_prime_u64(p)) throw NotPrimeError(p);
  checked_total_pairs(r, s, n, caps);
  check_det_bound(r, s, n);

  // mod-p route first: reduce the entry sets and look for singular sums
  if (p > FieldCtx::kMaxCardinality) {
    throw SizeExceededError("prime " + std::to_string(p) + " above the field cardinality cap");
  }
  FieldCtx f = FieldCtx::make(static_cast<std::uint32_t>(p), 1);
  std::vector<std::uint32_t> rbar, sbar;
  for (std::uint64_t v : r.members) rbar.push_back(static_cast<std::uint32_t>(v % p));
  for (std::uint64_t v : s.members) sbar.push_back(static_cast<std::uint32_t>(v % p));
  MatrixSet ma = MatrixSet::product_of_entries(n, f, rbar, caps);
  MatrixSet mb = MatrixSet::product_of_entries(n, f, sbar, caps);
  if (count_singular_sums(ma, mb, caps) == 0) return false;

  // some residue pair is singular mod p; confirm a witness whose integer
  // determinant is nonzero (residue entries can collapse, so lift back)
  const SumEntryPool pool = entry_sums(r, s);
  bool found = false;
  for_each_sum_matrix(pool, n, 0, sum_matrix_count(pool, n * n),
                      [&](std::int64_t d, std::uint64_t) {
                        if (!found && d != 0 && d % static_cast<std::int64_t>(p) == 0) {
                          found = true;
                        }
                      });
  return found;
}

}  // namespace matring
