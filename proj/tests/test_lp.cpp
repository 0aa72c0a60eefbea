#include <random>

#include "doctest.h"
#include "scdt/catalog.hpp"
#include "scdt/lp_bounds.hpp"
#include "support.hpp"

using scdt::Polynomial;
using scdt::QuadExt;

TEST_CASE("levenshtein polynomial for n = 5, s = 2, r = 1/5") {
  auto lev = scdt::levenshtein_polynomial(5, 2, test::q("1/5"));
  // P_1 = (5u+1)/6, P_2 = (7(u-1)^2 + 16(u-1) + 8)/8, P_1(1/5) = 1/3, P_2(1/5) = -1/25
  Polynomial u = Polynomial::monomial(QuadExt(1), 1);
  Polynomial p1 = (u * QuadExt(5) + Polynomial::constant(QuadExt(1))) * test::q("1/6");
  Polynomial um1 = u - Polynomial::constant(QuadExt(1));
  Polynomial p2 = (um1 * um1 * QuadExt(7) + um1 * QuadExt(16) + Polynomial::constant(QuadExt(8))) * test::q("1/8");
  CHECK(p1 == scdt::jacobi_adjacent(5, 1));
  CHECK(p2 == scdt::jacobi_adjacent(5, 2));
  CHECK(lev.poly == p2 * test::q("1/3") + p1 * test::q("1/25"));
  CHECK(lev.poly(test::q("1/5")).is_zero());
  CHECK(lev.poly(test::q("-3/5")).is_zero());
}

TEST_CASE("levenshtein polynomial with r = 0 vanishes at -1") {
  for (int n = 3; n <= 20; ++n) {
    auto lev = scdt::levenshtein_polynomial(n, 2, QuadExt(0));
    CHECK(lev.poly(QuadExt(-1)).is_zero());
    CHECK(lev.poly(QuadExt(0)).is_zero());
  }
}

TEST_CASE("levenshtein polynomial for the icosahedron") {
  const QuadExt r = QuadExt::sqrt_of(scdt::make_rational(1, 5));
  auto lev = scdt::levenshtein_polynomial(3, 3, r);
  CHECK(lev.poly.degree() == 3);
  CHECK_FALSE(lev.poly.is_rational());
  for (const QuadExt& a : {r, -r, QuadExt(-1)}) CHECK(lev.poly(a).is_zero());
}

TEST_CASE("levenshtein polynomial argument checks") {
  CHECK_THROWS_AS(scdt::levenshtein_polynomial(3, 2, QuadExt(1)), scdt::BoundError);
  CHECK_THROWS_AS(scdt::levenshtein_polynomial(3, 2, QuadExt(-1)), scdt::BoundError);
  // at a root of P_{s-1} the degree collapses
  auto p1 = scdt::jacobi_adjacent(3, 1);
  const QuadExt root = -p1.coeffs()[0] / p1.coeffs()[1];
  CHECK(p1(root).is_zero());
  CHECK_THROWS_AS(scdt::levenshtein_polynomial(3, 2, root), scdt::BoundError);
}

TEST_CASE("levenshtein polynomial vanishes at r for random r") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> den(2, 60);
  std::uniform_int_distribution<int> dim(3, 12), cls(2, 5);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const long d = den(rng);
    std::uniform_int_distribution<long> num(-d + 1, d - 1);
    const QuadExt r(scdt::make_rational(num(rng), d));
    const int n = dim(rng), s = cls(rng);
    if (scdt::jacobi_adjacent(n, s - 1)(r).is_zero()) continue;
    auto lev = scdt::levenshtein_polynomial(n, s, r);
    CHECK(lev.poly(r).is_zero());
    CHECK(lev.poly.degree() == s);
    ++checked;
  }
  CHECK(checked > 90);
}

TEST_CASE("root match on sharp corpus codes") {
  for (int n = 3; n <= 10; ++n) {
    auto m = scdt::verify_root_match(scdt::cross_polytope(n));
    CHECK(m.matched());
    CHECK(m.residuals.size() == 2);
  }
  for (const char* name : {"clebsch16", "icosahedron", "e8_kissing"}) {
    auto m = scdt::verify_root_match(scdt::construct(name));
    CHECK(m.matched());
    for (const auto& res : m.residuals) CHECK(res.is_zero());
  }
  CHECK(scdt::verify_root_match(scdt::e8_kissing()).levenshtein.r == test::q("1/2"));
  // cell24 has t = 5 < 2s - 1 = 7
  CHECK_THROWS_AS(scdt::verify_root_match(scdt::cell24()), scdt::BoundError);
}

TEST_CASE("pair-sum lemma") {
  using V = scdt::PairSumVerdict;
  CHECK(scdt::pair_sum_lemma(test::qs({"1/5", "-3/5"}), false).verdict == V::kHolds);
  CHECK(scdt::pair_sum_lemma(test::qs({"0", "-1"}), true).verdict == V::kNotApplicable);
  CHECK(scdt::pair_sum_lemma(test::qs({"1/2", "0", "-1/2", "-1"}), true).verdict == V::kNotApplicable);
  CHECK(std::string(scdt::to_string(V::kNotApplicable)) == "not applicable (tight)");
  auto fails = scdt::pair_sum_lemma(test::qs({"1/3", "0", "-1/3"}), false);
  CHECK(fails.verdict == V::kFails);
  REQUIRE(fails.witness);
  // (0, 2) precedes (1, 1) in (i, j) order
  CHECK(*fails.witness == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("LP certificate for clebsch16") {
  auto c = scdt::lp_certificate(scdt::clebsch16());
  CHECK(c.linear_root == test::q("1/5"));
  CHECK(c.g.g == test::qs({"16/125", "96/175", "4/5", "4/7"}));
  CHECK(c.bound == QuadExt(16));
  CHECK(c.attained);
  Polynomial u = Polynomial::monomial(QuadExt(1), 1);
  auto lin = [&](const char* a) { return u - Polynomial::constant(test::q(a)); };
  CHECK(c.poly == lin("1/5") * lin("-3/5") * lin("-3/5"));
}

TEST_CASE("LP certificates on the Delsarte corpus") {
  for (int n = 3; n <= 10; ++n) {
    auto c = scdt::lp_certificate(scdt::cross_polytope(n));
    CHECK(c.linear_root == QuadExt(-1));
    CHECK(c.g.g[0] == QuadExt(scdt::make_rational(1, n)));
    CHECK(c.bound == QuadExt(long(2 * n)));
    CHECK(c.attained);
  }
  auto ico = scdt::lp_certificate(scdt::icosahedron());
  CHECK(ico.poly.is_rational());
  CHECK(ico.bound == QuadExt(12));
  CHECK(ico.attained);
  auto e8 = scdt::lp_certificate(scdt::e8_kissing());
  CHECK(e8.bound == QuadExt(240));
  CHECK(e8.attained);
  for (const char* name : {"icosahedron", "clebsch16", "e8_kissing", "cross_polytope(5)"}) {
    auto c = scdt::lp_certificate(scdt::construct(name));
    CHECK(c.g0_positive);
    CHECK(c.coefficients_nonnegative);
    CHECK_FALSE(c.offending_k);
    CHECK(c.vanishes_on_spectrum);
    // expansion round trip
    CHECK(c.g.to_polynomial() == c.poly);
    for (const auto& gk : c.g.g) CHECK(gk.sign() >= 0);
  }
}

TEST_CASE("LP certificate is not attained off the Delsarte range") {
  auto c = scdt::lp_certificate(scdt::cell24());
  CHECK_FALSE(c.attained);
  CHECK(c.bound != QuadExt(24));
}

TEST_CASE("bannai inequality") {
  auto b33 = scdt::bannai_inequality(3, 3);
  CHECK(b33.holds);
  CHECK(b33.lhs == 3);
  CHECK(b33.rhs == 3);
  auto b43 = scdt::bannai_inequality(4, 3);
  CHECK_FALSE(b43.holds);
  CHECK(b43.rhs == 6);
  for (int n = 4; n <= 50; ++n) CHECK_FALSE(scdt::bannai_inequality(n, 3).holds);
  for (int s : {4, 5}) {
    for (int n = 3; n <= 50; ++n) CHECK_FALSE(scdt::bannai_inequality(n, s).holds);
  }
  // independent evaluation of h_{n,s-1} (1 - (s-1)/(n+2s-4))
  for (int n = 3; n <= 20; ++n) {
    for (int s = 2; s <= 6; ++s) {
      scdt::Rational h(scdt::harmonic_dimension(n, s - 1));
      scdt::Rational rhs = h * (1 - scdt::make_rational(s - 1, n + 2 * s - 4));
      CHECK(scdt::bannai_inequality(n, s).rhs == rhs);
    }
  }
}
