#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "matring/intexp.hpp"
#include "matring/primes.hpp"
#include "matring/rng.hpp"

using namespace matring;

namespace {

// factor by naive repeated division, the oracle for the omega pipeline
std::set<std::uint64_t> naive_factors(std::int64_t v) {
  std::set<std::uint64_t> out;
  std::uint64_t m = static_cast<std::uint64_t>(v < 0 ? -v : v);
  for (std::uint64_t d = 2; d <= m; ++d) {
    while (m % d == 0) {
      out.insert(d);
      m /= d;
    }
  }
  return out;
}

// literal pair loop over M_n(R) x M_n(S) for n = 2
struct NaiveOmega {
  std::set<std::uint64_t> primes;
  std::uint64_t zero_pairs = 0;
  std::uint64_t pairs = 0;
};

NaiveOmega naive_omega_2x2(const std::vector<std::uint64_t>& r,
                           const std::vector<std::uint64_t>& s) {
  NaiveOmega out;
  std::uint64_t a[4], b[4];
  const std::size_t rn = r.size(), sn = s.size();
  for (std::size_t i0 = 0; i0 < rn; ++i0)
    for (std::size_t i1 = 0; i1 < rn; ++i1)
      for (std::size_t i2 = 0; i2 < rn; ++i2)
        for (std::size_t i3 = 0; i3 < rn; ++i3) {
          a[0] = r[i0], a[1] = r[i1], a[2] = r[i2], a[3] = r[i3];
          for (std::size_t j0 = 0; j0 < sn; ++j0)
            for (std::size_t j1 = 0; j1 < sn; ++j1)
              for (std::size_t j2 = 0; j2 < sn; ++j2)
                for (std::size_t j3 = 0; j3 < sn; ++j3) {
                  b[0] = s[j0], b[1] = s[j1], b[2] = s[j2], b[3] = s[j3];
                  const std::int64_t d =
                      static_cast<std::int64_t>((a[0] + b[0]) * (a[3] + b[3])) -
                      static_cast<std::int64_t>((a[1] + b[1]) * (a[2] + b[2]));
                  ++out.pairs;
                  if (d == 0) {
                    ++out.zero_pairs;
                  } else {
                    auto fs = naive_factors(d);
                    out.primes.insert(fs.begin(), fs.end());
                  }
                }
        }
  return out;
}

}  // namespace

TEST_CASE("nu_p spot values") {
  CHECK(nu_p(IntSet::range(12), 5) == 5);
  CHECK(nu_p(IntSet::from_list({1, 2, 3}), 7) == 3);
  CHECK(nu_p(IntSet::from_list({3, 6, 9, 1}), 3) == 2);
}

TEST_CASE("sigma_p spot values") {
  CHECK(sigma_p(IntSet::range(10), 3) == 34);  // multiplicities (3,4,3)
  CHECK(sigma_p(IntSet::from_list({42}), 5) == 1);
  CHECK(sigma_p(IntSet::from_list({42}), 11) == 1);
  for (std::uint64_t p : {2ull, 3ull, 7ull, 13ull}) {
    CHECK(sigma_p(IntSet::range(p), p) == p);  // each class once
  }
}

TEST_CASE("primes_in spot values") {
  CHECK(primes_in(10, 20) == std::vector<std::uint64_t>{11, 13, 17, 19});
  CHECK(primes_in(2, 2) == std::vector<std::uint64_t>{2});
  CHECK(primes_in(90, 100) == std::vector<std::uint64_t>{97});
  CHECK_THROWS_AS(primes_in(2, (1ull << 31) + 1), RangeTooLargeError);
}

TEST_CASE("mu/nu/sigma bookkeeping identities") {
  SplitMix64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const std::uint64_t N = 2 + rng.below(500);
    IntSet t = IntSet::random(rng.next(), 1 + rng.below(N), N);
    const std::uint64_t p = 2 + rng.below(97);
    std::map<std::uint64_t, std::uint64_t> mu;
    for (std::uint64_t v : t.members) mu[v % p]++;
    std::uint64_t mu_sum = 0;
    for (auto& [u, m] : mu) mu_sum += m;
    CHECK(mu_sum == t.size());
    CHECK(nu_p(t, p) == mu.size());
    CHECK(nu_p(t, p) <= std::min<std::uint64_t>(p, t.size()));
  }
}

TEST_CASE("Cauchy inequality (#T)^2 <= nu_p sigma_p, exact integers") {
  SplitMix64 rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    const std::uint64_t N = 2 + rng.below(1000);
    IntSet t = IntSet::random(rng.next(), 1 + rng.below(N), N);
    const std::uint64_t p = 2 + rng.below(199);
    CHECK(t.size() * t.size() <= nu_p(t, p) * sigma_p(t, p));
  }
}

TEST_CASE("nu_p of a full range is min(p, N)") {
  for (std::uint64_t N : {1ull, 2ull, 17ull, 100ull, 200ull}) {
    IntSet t = IntSet::range(N);
    for (std::uint64_t p : primes_in(2, 400)) {
      CHECK(nu_p(t, p) == std::min(p, N));
    }
  }
}

TEST_CASE("census: {1..100} with Q = 10 passes everywhere") {
  ResClassCensus census = resclass_census(IntSet::range(100), 10);
  CHECK(census.prime_count == 4);  // 11, 13, 17, 19
  CHECK(census.rows[0].p == 11);
  CHECK(census.rows[0].nu == 11);
  CHECK(census.pass_count == 4);
  CHECK(census.pass_fraction == 1.0);
}

TEST_CASE("census: singleton set has nu_p = 1 in every row") {
  ResClassCensus census = resclass_census(IntSet::from_list({5}, 100), 10);
  for (const CensusRow& row : census.rows) {
    CHECK(row.nu == 1);
    CHECK(row.pass == (1.0 >= row.threshold));
  }
}

TEST_CASE("census determinism and monotonicity under supersets") {
  IntSet small = IntSet::random(5, 40, 300);
  ResClassCensus a = resclass_census(small, 20);
  ResClassCensus b = resclass_census(small, 20);
  CHECK(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].p == b.rows[i].p);
    CHECK(a.rows[i].nu == b.rows[i].nu);
    CHECK(a.rows[i].threshold == b.rows[i].threshold);
    CHECK(a.rows[i].pass == b.rows[i].pass);
  }

  // enlarging the set never decreases any nu_p, so passes only accumulate
  std::vector<std::uint64_t> widened = small.members;
  IntSet extra = IntSet::random(6, 40, 300);
  widened.insert(widened.end(), extra.members.begin(), extra.members.end());
  ResClassCensus c = resclass_census(IntSet::from_list(widened, 300), 20);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(c.rows[i].nu >= a.rows[i].nu);
    if (a.rows[i].pass) CHECK(c.rows[i].pass);
  }
}

TEST_CASE("omega spot values") {
  OmegaReport trivial = omega_w(IntSet::from_list({1}), IntSet::from_list({1}), 2);
  CHECK(trivial.omega == 0);
  CHECK(trivial.zero_det_pairs == 1);  // the all-2s matrix
  CHECK(trivial.total_pairs == 1);

  OmegaReport rep = omega_w(IntSet::from_list({1, 2}), IntSet::from_list({1}), 2);
  CHECK(rep.primes == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(rep.omega == 3);
  CHECK(rep.total_pairs == 16);
}

TEST_CASE("omega equals the literal pair-loop oracle") {
  for (auto [r, s] : std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>{
           {{1, 2}, {1}}, {{1, 2}, {1, 2}}, {{1, 3, 4}, {2, 5}}, {{2, 7}, {1, 5, 6}}}) {
    NaiveOmega expect = naive_omega_2x2(r, s);
    OmegaReport got = omega_w(IntSet::from_list(r), IntSet::from_list(s), 2);
    CHECK(got.primes == std::vector<std::uint64_t>(expect.primes.begin(), expect.primes.end()));
    CHECK(got.zero_det_pairs == expect.zero_pairs);
    CHECK(got.total_pairs == expect.pairs);
  }
}

TEST_CASE("divides_w spot values and cross-oracle agreement") {
  IntSet r12 = IntSet::from_list({1, 2}), s1 = IntSet::from_list({1});
  CHECK(divides_w(r12, s1, 2, 5));
  CHECK_FALSE(divides_w(IntSet::from_list({1}), s1, 2, 7));
  CHECK_THROWS_AS(divides_w(r12, s1, 2, 6), NotPrimeError);

  IntSet r = IntSet::from_list({1, 2, 3}), s = IntSet::from_list({1, 2, 3});
  OmegaReport rep = omega_w(r, s, 2);
  std::set<std::uint64_t> in_omega(rep.primes.begin(), rep.primes.end());
  // agreement over every prime up to the determinant bound 2(2N)^2 = 72
  for (std::uint64_t p : primes_in(2, 72)) {
    CHECK(divides_w(r, s, 2, p) == (in_omega.count(p) > 0));
  }
}

TEST_CASE("omega caps and bad sets are rejected") {
  Caps tight;
  tight.scan_cap = 100;
  CHECK_THROWS_AS(omega_w(IntSet::from_list({1, 2}), IntSet::from_list({1, 2}), 2, tight),
                  CapExceededError);
  CHECK_THROWS_AS(IntSet::from_list({}), ConfigError);
  CHECK_THROWS_AS(IntSet::from_list({0, 1}), ConfigError);
  CHECK_THROWS_AS(IntSet::from_list({5}, 4), ConfigError);
  CHECK_THROWS_AS(resclass_census(IntSet::range(100), 1), ConfigError);
}

TEST_CASE("random integer sets are deterministic and in range") {
  IntSet a = IntSet::random(9, 25, 60);
  IntSet b = IntSet::random(9, 25, 60);
  CHECK(a.members == b.members);
  CHECK(a.size() == 25);
  for (std::uint64_t v : a.members) {
    CHECK(v >= 1);
    CHECK(v <= 60);
  }
}
