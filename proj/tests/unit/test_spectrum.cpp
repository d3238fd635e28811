#include "kdeck/spectrum.hpp"

#include "oracles.hpp"

#include <doctest.h>

using kdeck::CyclicSet;
using kdeck::IntFunction;
using kdeck::IntPolynomial;

namespace {

// Longest run of non-members, scanning the doubled sequence.
int gap_oracle(const CyclicSet& a) {
  const int n = a.modulus();
  int best = 0, run = 0;
  for (int i = 0; i < 2 * n; ++i) {
    run = a.contains(i % n) ? 0 : run + 1;
    best = std::max(best, std::min(run, n));
  }
  return best;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(kdeck::cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(kdeck::cyclotomic(6) == IntPolynomial{1, -1, 1});
  CHECK(kdeck::cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
  CHECK(kdeck::cyclotomic(12).str() == "x^4 - x^2 + 1");
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  CHECK(kdeck::cyclotomic(105).coefficient(7) == -2);

  for (int n = 1; n <= 300; ++n) {
    IntPolynomial prod{1};
    for (int d : oracle::trial_divisors(n)) {
      const auto phi = kdeck::cyclotomic(d);
      REQUIRE(phi.degree() == oracle::totient(d));
      prod = prod * phi;
    }
    REQUIRE(prod == IntPolynomial::x_pow_minus_one(n));
  }
}

TEST_CASE("polynomial division") {
  const IntPolynomial a{-1, 0, 0, 0, 0, 0, 1};  // x^6 - 1
  const auto [q, r] = kdeck::divmod_monic(a, kdeck::cyclotomic(3));
  CHECK(r.is_zero());
  CHECK(q * kdeck::cyclotomic(3) == a);
  CHECK_THROWS_AS(kdeck::divmod_monic(a, IntPolynomial{1, 2}), std::invalid_argument);
  const std::vector<std::int64_t> c{1, 1, 1}, phi3{1, 1, 1}, phi6{1, -1, 1};
  CHECK(kdeck::divisible_by_monic(c, phi3));
  CHECK_FALSE(kdeck::divisible_by_monic(c, phi6));
}

TEST_CASE("exact zero tests") {
  const CyclicSet half(12, {1, 2, 3, 4, 5, 6});
  CHECK(kdeck::ft_is_zero(half, 2));
  CHECK_FALSE(kdeck::ft_is_zero(half, 1));
  CHECK_FALSE(kdeck::ft_is_zero(CyclicSet(9, {4}), 0));
  CHECK(kdeck::ft_is_zero(CyclicSet(6, {0, 2, 4}), 1));
  CHECK(std::abs(oracle::direct_ft({1, 0, 1, 0, 1, 0}, 1)) < 1e-12L);

  SUBCASE("agrees with direct complex evaluation") {
    oracle::Gen gen(4);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = gen.uniform(1, 40);
      const auto f = gen.values(n, -3, 3);
      const auto fn = IntFunction::from_ints(n, f);
      const kdeck::SpectrumContext ctx(n);
      for (int s = 0; s < n; ++s) {
        const bool exact = ctx.is_zero(fn, s);
        const long double mag = std::abs(oracle::direct_ft(f, s));
        REQUIRE(exact == (mag < 1e-9L));
      }
    }
  }
}

TEST_CASE("big numerators take the arbitrary-precision path") {
  const kdeck::BigInt huge = kdeck::BigInt(1) << 100;
  // huge * (1 + x^2 + x^4) in Z_6 vanishes at s = 1, not at s = 3.
  const IntFunction f(6, {huge, 0, huge, 0, huge, 0});
  CHECK(kdeck::ft_is_zero(f, 1));
  CHECK_FALSE(kdeck::ft_is_zero(f, 3));
  CHECK_FALSE(kdeck::ft_is_zero(f, 0));
}

TEST_CASE("zero_set reports") {
  const auto rep = kdeck::zero_set(CyclicSet(12, {1, 2, 3, 4, 5, 6}));
  CHECK(rep.full_support.elements() == std::vector<int>{0, 1, 3, 5, 7, 9, 11});
  CHECK(rep.zero_mask == rep.full_support.complement());
  CHECK(rep.support_divisors == std::vector<int>{1, 3, 12});

  CHECK(kdeck::zero_set(CyclicSet::full(10)).full_support.elements() == std::vector<int>{0});
  CHECK(kdeck::zero_set(CyclicSet(10)).full_support.empty());
  CHECK(kdeck::zero_set(CyclicSet(13, {0, 5})).zero_mask.empty());
}

TEST_CASE("zero patterns are unions of gcd classes and translation invariant") {
  oracle::Gen gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.uniform(1, 60);
    const auto f = gen.values(n, -2, 2);
    const auto fn = IntFunction::from_ints(n, f);
    const kdeck::SpectrumContext ctx(n);
    std::vector<int> verdict(static_cast<std::size_t>(n + 1), -1);
    for (int s = 0; s < n; ++s) {
      const int g = static_cast<int>(oracle::gcd(s, n));
      const int z = ctx.is_zero(fn, s) ? 1 : 0;
      if (verdict[static_cast<std::size_t>(g)] < 0) verdict[static_cast<std::size_t>(g)] = z;
      REQUIRE(verdict[static_cast<std::size_t>(g)] == z);
    }
    const auto rep = ctx.report(fn);
    REQUIRE(ctx.report(fn.translated(gen.uniform(0, n - 1))).zero_mask == rep.zero_mask);
    for (int s = 0; s < n; ++s) REQUIRE(rep.zero_mask.contains(s) == ctx.is_zero(fn, s));
  }
}

TEST_CASE("periodic functions have support in the matching subgroup") {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.uniform(1, 48);
    const auto ds = oracle::trial_divisors(n);
    // Half the time build an a-periodic function on purpose.
    std::vector<std::int64_t> f = gen.values(n, -2, 2);
    const int a = ds[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(ds.size()) - 1))];
    if (gen.coin())
      for (int x = a; x < n; ++x) f[static_cast<std::size_t>(x)] = f[static_cast<std::size_t>(x - a)];
    const auto fn = IntFunction::from_ints(n, f);
    const auto rep = kdeck::zero_set(fn);
    const CyclicSet sub = kdeck::subgroup(n, n / a);
    const bool inside = (rep.full_support & sub.complement()).empty();
    REQUIRE(kdeck::is_periodic(fn, a) == inside);
  }
  CHECK_THROWS_AS(kdeck::is_periodic(CyclicSet(6, {0}), 4), std::invalid_argument);
  CHECK(kdeck::is_periodic(CyclicSet(6, {0, 2, 4}), 2));
}

TEST_CASE("gap and A_x") {
  CHECK(kdeck::a_x(12, 2).elements() == std::vector<int>{1, 2, 5, 7, 10, 11});
  CHECK(kdeck::a_x(12, 12) == CyclicSet::full(12));
  CHECK(kdeck::a_x(12, 1).elements() == std::vector<int>{1, 5, 7, 11});
  CHECK(kdeck::gap(CyclicSet(10)) == 10);
  CHECK(kdeck::gap(CyclicSet(10, {0})) == 9);
  CHECK(kdeck::gap(CyclicSet(10, {2, 8})) == 5);  // 3..7
  CHECK(kdeck::gap(CyclicSet(10, {4, 5})) == 8);  // wraps through 0

  oracle::Gen gen(31);
  for (int trial = 0; trial < 300; ++trial) {
    const CyclicSet a = gen.set(gen.uniform(1, 70), 0.2);
    REQUIRE(kdeck::gap(a) == gap_oracle(a));
  }
  for (int n = 1; n <= 10000; ++n) {
    const auto dn = static_cast<int>(kdeck::arith_profile(n).divisor_count);
    // Strictly below d(n), which is what the interval argument needs.
    REQUIRE(kdeck::gap(kdeck::a_x(n, dn)) < dn);
  }
}

TEST_CASE("float transforms") {
  const std::vector<double> delta{1, 0, 0, 0, 0};
  for (const auto& z : kdeck::float_dft(delta)) CHECK(std::abs(z - std::complex<double>(1, 0)) < 1e-12);

  for (int n : {4, 7, 12}) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = std::cos(2 * std::numbers::pi * k / n);
    const auto spec = kdeck::float_dft(g);
    for (int s = 0; s < n; ++s) {
      const double expect = (s == 1 || s == n - 1) ? n / 2.0 : 0.0;
      CHECK(std::abs(std::abs(spec[static_cast<std::size_t>(s)]) - expect) < 1e-9);
    }
    const auto back = kdeck::float_idft(spec);
    for (int k = 0; k < n; ++k) CHECK(std::abs(back[static_cast<std::size_t>(k)] - g[static_cast<std::size_t>(k)]) < 1e-12);
  }

  oracle::Gen gen(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.uniform(2, 40);
    const CyclicSet e = gen.set(n);
    const auto f = oracle::indicator(e);
    const std::vector<double> fd(f.begin(), f.end());
    const auto spec = kdeck::float_dft(fd);
    for (int s = 0; s < n; ++s)
      REQUIRE(kdeck::ft_is_zero(e, s) == (std::abs(spec[static_cast<std::size_t>(s)]) < n * 1e-9));
  }
}
