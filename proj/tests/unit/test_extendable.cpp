#include "kdeck/extendable.hpp"
#include "kdeck/spectrum.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <functional>

using kdeck::BigInt;
using kdeck::BigRational;
using kdeck::CyclicSet;
using kdeck::ModOneFunction;

namespace {

// Independent additivity test on integer numerators over D.
bool additive_brute(int n, const std::vector<int>& dom, const std::vector<std::int64_t>& a, std::int64_t d) {
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < dom.size(); ++i) pos[static_cast<std::size_t>(dom[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const int s = pos[static_cast<std::size_t>((dom[i] + dom[j]) % n)];
      if (s >= 0 && (a[i] + a[j] - a[static_cast<std::size_t>(s)]) % d != 0) return false;
    }
  return true;
}

// Any real slope fits iff one of the k0 rational candidates fits.
bool linear_brute(const std::vector<int>& dom, const std::vector<std::int64_t>& a, std::int64_t d) {
  std::size_t i0 = dom.size();
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (dom[i] != 0) {
      i0 = i;
      break;
    }
  if (i0 == dom.size()) return a[0] % d == 0;
  const std::int64_t k0 = dom[i0];
  for (std::int64_t z = 0; z < k0; ++z) {
    // t = (a0 + z d) / (d k0)
    bool ok = true;
    for (std::size_t i = 0; i < dom.size() && ok; ++i)
      ok = ((a[i0] + z * d) * dom[i] - a[i] * k0) % (d * k0) == 0;
    if (ok) return true;
  }
  return false;
}

// Searches additive, non-linear functions with values in (1/d)Z / Z.
bool has_small_witness(const CyclicSet& dom_set, std::int64_t d) {
  const auto dom = dom_set.elements();
  std::vector<std::int64_t> a(dom.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == dom.size()) return additive_brute(dom_set.modulus(), dom, a, d) && !linear_brute(dom, a, d);
    for (std::int64_t v = 0; v < d; ++v) {
      a[i] = v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

void check_witness(const CyclicSet& a, const kdeck::ExtendabilityVerdict& v) {
  REQUIRE_FALSE(v.extendable);
  REQUIRE(v.witness.has_value());
  REQUIRE_FALSE(v.slope.has_value());
  const auto& h = *v.witness;
  REQUIRE(h.support == a.elements());
  REQUIRE(kdeck::is_additive(h));
  // Every constraint row evaluates to an integer.
  const auto sys = kdeck::build_constraints(a);
  const auto m = sys.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * h.numerators[j];
    REQUIRE(acc % h.denominator == 0);
  }
  if (a.elements().back() != 0) REQUIRE_FALSE(kdeck::linearity_check(h).has_value());
}

void check_certificate(const CyclicSet& a, const kdeck::ExtendabilityVerdict& v) {
  REQUIRE(v.extendable);
  REQUIRE_FALSE(v.witness.has_value());
  REQUIRE(v.slope.has_value());
  for (const auto& g : v.slope->torsion) {
    REQUIRE(kdeck::is_additive(g.generator));
    for (std::size_t i = 0; i < g.generator.support.size(); ++i) {
      const BigRational diff = g.slope * g.generator.support[i] - g.generator.value(i);
      REQUIRE(boost::multiprecision::denominator(diff) == 1);
    }
  }
  (void)a;
}

CyclicSet classes_union(int n, std::initializer_list<int> divs) {
  CyclicSet out(n);
  for (int a : divs) out = out | kdeck::gcd_class(n, a);
  return out;
}

}  // namespace

TEST_CASE("constraint systems") {
  const auto s0 = kdeck::build_constraints(CyclicSet(12, {0}));
  REQUIRE(s0.rows.size() == 1);
  CHECK(s0.row_vector(0) == std::vector<std::int64_t>{1});

  CHECK(kdeck::build_constraints(CyclicSet(12, {1})).rows.empty());

  const auto s = kdeck::build_constraints(CyclicSet(12, {0, 1, 3, 5, 7, 9, 11}));
  CHECK(s.support == std::vector<int>{0, 1, 3, 5, 7, 9, 11});
  bool wrap_pair = false;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const auto r = s.row_vector(i);
    for (auto x : r) REQUIRE((x >= -1 && x <= 2));
    if (s.rows[i].x == 1 && s.rows[i].y == 11) {
      wrap_pair = true;
      CHECK(r == std::vector<std::int64_t>{-1, 1, 0, 0, 0, 0, 1});
      CHECK(s.rows[i].wraps(12));
    }
    REQUIRE(s.rows[i].x <= s.rows[i].y);
  }
  CHECK(wrap_pair);
  // Unordered pairs only: 0 pairs with all 7, odd + odd is even and only 0 is even.
  CHECK(s.rows.size() == 7 + 3);
}

TEST_CASE("negative witness for the half-interval support in Z_12") {
  const CyclicSet a(12, {0, 1, 3, 5, 7, 9, 11});
  CHECK(a == kdeck::zero_set(CyclicSet(12, {1, 2, 3, 4, 5, 6})).full_support);
  const auto v = kdeck::is_extendable(a);
  check_witness(a, v);
  CHECK_FALSE(kdeck::extendable_by_index(a));

  // The phase function from the construction, h(1) = 1/2, h(-1) = -1/2.
  ModOneFunction h{12, a.elements(), {0, 1, 0, 0, 0, 0, -1}, 2};
  CHECK(kdeck::is_additive(h));
  CHECK_FALSE(kdeck::linearity_check(h).has_value());
  CHECK(has_small_witness(a, 2));
}

TEST_CASE("linearity check") {
  ModOneFunction h{15, {0, 3, 5}, {0, 6, 10}, 15};
  const auto t = kdeck::linearity_check(h);
  REQUIRE(t.has_value());
  CHECK(*t == BigRational(2, 15));

  ModOneFunction zero{15, {0, 3, 5}, {0, 0, 0}, 7};
  CHECK(kdeck::linearity_check(zero) == BigRational(0));

  ModOneFunction only_zero{15, {0}, {0}, 1};
  CHECK_THROWS_AS(kdeck::linearity_check(only_zero), std::invalid_argument);
}

TEST_CASE("positive examples") {
  for (int n : {1, 2, 5, 12, 30}) {
    const auto v = kdeck::is_extendable(CyclicSet::full(n));
    check_certificate(CyclicSet::full(n), v);
  }
  const CyclicSet multiples(15, {0, 3, 6, 9, 12});
  const auto v = kdeck::is_extendable(multiples);
  check_certificate(multiples, v);
  REQUIRE(v.slope->torsion.size() == 1);
  CHECK(kdeck::is_extendable(CyclicSet(12, {0})).extendable);
  CHECK_THROWS_AS(kdeck::is_extendable(CyclicSet(12)), std::invalid_argument);
}

TEST_CASE("index and duality routes agree; witnesses are sound") {
  oracle::Gen gen(61);
  int negatives = 0, positives = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = gen.uniform(1, 30);
    CyclicSet a = gen.set(n, gen.uniform(2, 9) / 10.0);
    if (gen.coin()) a.insert(0);
    if (a.empty()) continue;
    const bool fast = kdeck::extendable_by_index(a);
    const auto dual = kdeck::extendable_by_duality(a);
    REQUIRE(fast == dual.extendable);
    if (dual.extendable) {
      ++positives;
      check_certificate(a, dual);
    } else {
      ++negatives;
      check_witness(a, dual);
    }
  }
  CHECK(negatives > 50);
  CHECK(positives > 50);
}

TEST_CASE("brute-force search over small denominators") {
  // A small-denominator non-linear additive function refutes extendability.
  oracle::Gen gen(67);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = gen.uniform(1, 9);
    CyclicSet a = gen.set(n, 0.5);
    if (a.empty() || a.size() > 6) continue;
    const bool verdict = kdeck::extendable_by_index(a);
    for (std::int64_t d : {2, 3, 4, 6}) {
      if (has_small_witness(a, d)) REQUIRE_FALSE(verdict);
    }
  }
}

TEST_CASE("structured families from odd moduli are extendable") {
  SUBCASE("classes inside a subgroup") {
    for (int n = 1; n <= 21; n += 2)
      for (int a : oracle::trial_divisors(n)) {
        const CyclicSet base = kdeck::gcd_class(n, a);
        const CyclicSet sub = kdeck::subgroup(n, a);
        const auto free = (sub & base.complement()).elements();
        REQUIRE(free.size() <= 12);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
          CyclicSet s = base;
          for (std::size_t i = 0; i < free.size(); ++i)
            if ((bits >> i) & 1U) s.insert(free[i]);
          REQUIRE(kdeck::extendable_by_index(s));
        }
      }
  }
  SUBCASE("three subgroups with pairwise coprime generators") {
    for (int n = 1; n <= 30; ++n) {
      const auto ds = oracle::trial_divisors(n);
      for (int a : ds)
        for (int b : ds)
          for (int c : ds) {
            if (oracle::gcd(a, b) != 1 || oracle::gcd(b, c) != 1 || oracle::gcd(a, c) != 1) continue;
            if (n % (a * b * c) != 0) continue;
            const CyclicSet s = kdeck::subgroup(n, a) | kdeck::subgroup(n, b) | kdeck::subgroup(n, c);
            REQUIRE(kdeck::extendable_by_index(s));
          }
    }
  }
  SUBCASE("an interval of length d + 1 with gaps shorter than d") {
    oracle::Gen gen(71);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = gen.uniform(2, 30);
      const int d = gen.uniform(1, n - 1);
      CyclicSet s(n);
      for (int j = 0; j <= d; ++j) s.insert(j);
      for (int j = d + 1; j < n; ++j)
        if (gen.coin(0.4)) s.insert(j);
      // With a run of exactly d missing residues the induction stalls.
      if (kdeck::gap(s) >= d) continue;
      REQUIRE(kdeck::extendable_by_index(s));
    }
  }
  SUBCASE("a gap of exactly d can break extendability") {
    const CyclicSet s(4, {0, 1, 3});
    CHECK(kdeck::gap(s) == 1);
    CHECK_FALSE(kdeck::extendable_by_index(s));
    CHECK(has_small_witness(s, 8));
  }
  SUBCASE("two coprime classes plus their product") {
    CHECK(kdeck::extendable_by_index(classes_union(15, {3, 5}) | CyclicSet(15, {0})));
  }
}

TEST_CASE("memo") {
  kdeck::ExtendabilityMemo memo;
  const CyclicSet a(12, {0, 1, 3, 5, 7, 9, 11});
  CHECK_FALSE(memo(a));
  CHECK_FALSE(memo(a));
  CHECK(memo(CyclicSet::full(12)));
  CHECK(memo.size() == 2);
}
