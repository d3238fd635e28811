#include "kdeck/constructions.hpp"
#include "kdeck/deck.hpp"
#include "kdeck/spectrum.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <optional>

using kdeck::CyclicSet;

namespace {

bool same_brute_deck(const CyclicSet& e, const CyclicSet& f, int k) {
  return oracle::brute_deck(oracle::indicator(e), k) == oracle::brute_deck(oracle::indicator(f), k);
}

bool brute_translates(const CyclicSet& e, const CyclicSet& f) {
  return oracle::rotation_orbit(e.elements(), e.modulus()).count(f.elements()) > 0;
}

std::vector<double> as_double(const CyclicSet& e) {
  const auto v = oracle::indicator(e);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("even construction") {
  const auto p = kdeck::even_pair(6);
  CHECK(p.n == 12);
  CHECK(p.e == CyclicSet(12, {0, 3, 4, 5, 7, 8}));
  CHECK(p.f == CyclicSet(12, {0, 1, 3, 4, 5, 8}));
  CHECK(p.kind == kdeck::PairKind::Even);
  CHECK(kdeck::to_string(p.kind) == "even-2k");
  CHECK(p.verified.deck_order == 3);
  CHECK(p.verified.decks_equal);
  CHECK_FALSE(p.verified.translates);
  CHECK(p.verified.claim_holds());
  // E is a translate of -F, hence the equal 2-decks.
  CHECK(kdeck::translation_equivalent(p.e, kdeck::reflect(p.f)).has_value());
  CHECK(same_brute_deck(p.e, p.f, 2));
  CHECK_THROWS_AS(kdeck::even_pair(5), std::invalid_argument);

  for (int k = 6; k <= 64; ++k) {
    const auto q = kdeck::even_pair(k);
    REQUIRE(q.n == 2 * k);
    REQUIRE(q.e.size() == q.f.size());
    REQUIRE(q.verified.claim_holds());
    if (k <= 16) {
      REQUIRE(same_brute_deck(q.e, q.f, 3));
      REQUIRE_FALSE(brute_translates(q.e, q.f));
    }
    // The transforms vanish at every even nonzero frequency.
    for (int s = 2; s < 2 * k; s += 2) {
      REQUIRE(kdeck::ft_is_zero(q.e, s));
      REQUIRE(kdeck::ft_is_zero(q.f, s));
    }
  }
}

TEST_CASE("pqrd construction") {
  const auto p = kdeck::pqrd_pair(2, 3, 2, 2);
  CHECK(p.n == 24);
  const CyclicSet a(24, {0, 2, 8, 10, 16, 18});
  CHECK(p.e == (a | CyclicSet(24, {1, 3, 13, 15})));
  CHECK(p.f == (a | CyclicSet(24, {3, 5, 15, 17})));
  CHECK(kdeck::to_string(p.kind) == "pqrd");

  // Support from the factorization: S_p u S_q u S_pqr.
  CyclicSet predicted(24);
  for (int s = 0; s < 24; ++s) {
    const bool sp = s % 2 == 0 && s % 3 != 0, sq = s % 3 == 0 && s % 2 != 0, spqr = s % 12 == 0;
    if (sp || sq || spqr) predicted.insert(s);
  }
  CHECK(kdeck::zero_set(p.e).full_support == predicted);
  CHECK(kdeck::zero_set(p.f).full_support == predicted);

  struct Params {
    int p, q, r, d;
  };
  for (const auto& [pp, qq, r, d] : {Params{2, 3, 2, 2}, Params{3, 2, 2, 2}, Params{2, 5, 2, 2}, Params{3, 5, 2, 2},
                                     Params{3, 5, 3, 3}, Params{5, 3, 2, 3}}) {
    const auto c = kdeck::pqrd_pair(pp, qq, r, d);
    CAPTURE(c.n);
    REQUIRE(c.n == pp * qq * r * d);
    REQUIRE(c.e.size() == static_cast<std::size_t>(qq * r + pp * r));
    REQUIRE(c.f.size() == c.e.size());
    REQUIRE(c.verified.claim_holds());
    if (c.n <= 60) {
      REQUIRE(same_brute_deck(c.e, c.f, 3));
      REQUIRE_FALSE(brute_translates(c.e, c.f));
    }
  }

  CHECK_THROWS_AS(kdeck::pqrd_pair(3, 3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(kdeck::pqrd_pair(4, 3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(kdeck::pqrd_pair(2, 3, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(kdeck::pqrd_pair(2, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("two-deck construction") {
  const CyclicSet a(101, {0, 10, 20, 30}), b(101, {0, 1, 3});
  const auto p = kdeck::two_deck_pair(a, b);
  CHECK(kdeck::to_string(p.kind) == "two-deck");
  CHECK(p.e.size() == 12);
  CHECK(p.verified.deck_order == 2);
  CHECK(p.verified.claim_holds());
  CHECK_FALSE(p.verified.decks_equal_at_3);
  CHECK(same_brute_deck(p.e, p.f, 2));
  CHECK_FALSE(same_brute_deck(p.e, p.f, 3));
  CHECK_FALSE(brute_translates(p.e, p.f));

  // Sums collide: 0 + 1 = 1 + 0.
  CHECK_THROWS_AS(kdeck::two_deck_pair(CyclicSet(101, {0, 1}), CyclicSet(101, {0, 1})), std::invalid_argument);
  // -B = B + 2.
  CHECK_THROWS_AS(kdeck::two_deck_pair(a, CyclicSet(101, {0, 1, 2})), std::invalid_argument);

  SUBCASE("random instances in prime moduli") {
    oracle::Gen gen(83);
    int built = 0;
    for (int trial = 0; trial < 200 && built < 25; ++trial) {
      const int n = std::vector<int>{31, 37, 41, 43}[static_cast<std::size_t>(gen.uniform(0, 3))];
      const CyclicSet x = gen.set(n, 0.1), y = gen.set(n, 0.1);
      if (x.empty() || y.empty()) continue;
      std::optional<kdeck::CounterexamplePair> built_pair;
      try {
        built_pair = kdeck::two_deck_pair(x, y);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const auto& c = *built_pair;
      ++built;
      REQUIRE(same_brute_deck(c.e, c.f, 2));
      REQUIRE(c.verified.decks_equal);
      if (!c.verified.translates) REQUIRE_FALSE(c.verified.decks_equal_at_3);
    }
    CHECK(built > 5);
  }
}

TEST_CASE("verify_pair") {
  const auto v = kdeck::verify_pair(CyclicSet(6, {0, 1}), CyclicSet(6, {2, 3}), 3);
  CHECK(v.decks_equal);
  CHECK(v.translates);
  CHECK_FALSE(v.claim_holds());
  CHECK_FALSE(kdeck::verify_pair(CyclicSet(5, {0, 1}), CyclicSet(5, {0, 2}), 3).decks_equal);
}

TEST_CASE("cosine pair") {
  for (int n : {4, 5, 12}) {
    const auto [f, g] = kdeck::cosine_pair(n);
    for (int k = 0; k < n; ++k) {
      REQUIRE(f[static_cast<std::size_t>(k)] == 0.0);
      REQUIRE(std::abs(g[static_cast<std::size_t>(k)] - std::cos(2 * std::numbers::pi * k / n)) < 1e-15);
    }
    CHECK(kdeck::max_abs_difference(kdeck::real_deck3(f), kdeck::real_deck3(g)) < 1e-9 * n * n * n);
    CHECK(kdeck::max_abs_difference(f, g) > 0.5);
  }
  CHECK_THROWS_AS(kdeck::cosine_pair(3), std::invalid_argument);
}

TEST_CASE("real deck matches the integer deck on indicators") {
  oracle::Gen gen(89);
  for (int trial = 0; trial < 30; ++trial) {
    const CyclicSet e = gen.set(gen.uniform(1, 15));
    const auto exact = oracle::brute_deck(oracle::indicator(e), 3);
    const auto approx = kdeck::real_deck3(as_double(e));
    REQUIRE(approx.size() == exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) REQUIRE(std::abs(approx[i] - static_cast<double>(exact[i])) < 1e-9);
  }
}

TEST_CASE("phase-shifted functions share the 3-deck of the half interval") {
  const CyclicSet half(12, {1, 2, 3, 4, 5, 6});
  const auto chi = as_double(half);
  const auto g0 = kdeck::g_alpha(12, 0.0);
  CHECK(kdeck::max_abs_difference(g0, chi) < 1e-9);

  const auto g = kdeck::g_alpha(12, 0.3);
  CHECK(kdeck::max_abs_difference(kdeck::real_deck3(g), kdeck::real_deck3(chi)) < 1e-6);
  for (int t = 0; t < 12; ++t) {
    const auto shifted = as_double(kdeck::rotate(half, t));
    CHECK(kdeck::max_abs_difference(g, shifted) > 1e-3);
  }
  // Distinct phases give distinct functions.
  CHECK(kdeck::max_abs_difference(g, kdeck::g_alpha(12, 0.31)) > 1e-4);

  CHECK_THROWS_AS(kdeck::g_alpha(11, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(kdeck::g_alpha(2, 0.3), std::invalid_argument);
}
