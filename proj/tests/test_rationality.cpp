#include "doctest.h"
#include "scdt/catalog.hpp"
#include "scdt/lp_bounds.hpp"
#include "scdt/rationality.hpp"
#include "support.hpp"

using scdt::QuadExt;
using scdt::Rational;

namespace {

const scdt::ScanStep& step(const scdt::ScanCertificate& c, const std::string& name) {
  for (const auto& s : c.steps) {
    if (s.name == name) return s;
  }
  FAIL("missing step " << name);
  return c.steps.front();
}

scdt::SphericalCode cuboctahedron() {
  // midpoints of the cube edges: permutations of (+-1, +-1, 0)
  std::vector<std::vector<QuadExt>> pts;
  for (int zero = 0; zero < 3; ++zero) {
    for (long a : {1L, -1L}) {
      for (long b : {1L, -1L}) {
        std::vector<QuadExt> v(3, QuadExt(0));
        v[(zero + 1) % 3] = QuadExt(a);
        v[(zero + 2) % 3] = QuadExt(b);
        pts.push_back(v);
      }
    }
  }
  return scdt::SphericalCode::from_coords(3, pts, QuadExt(2), "cuboctahedron");
}

scdt::SphericalCode pentagon() {
  const QuadExt c1 = test::q("-1/4 + 1/4*sqrt(5)"), c2 = test::q("-1/4 - 1/4*sqrt(5)");
  scdt::Matrix g(5, 5);
  for (std::size_t x = 0; x < 5; ++x) {
    for (std::size_t y = 0; y < 5; ++y) {
      const std::size_t d = std::min((x + 5 - y) % 5, (y + 5 - x) % 5);
      g(x, y) = d == 0 ? QuadExt(1) : d == 1 ? c1 : c2;
    }
  }
  return scdt::SphericalCode::from_gram(2, g, "pentagon");
}

}  // namespace

TEST_CASE("rationality verdicts on the corpus") {
  for (const char* name : {"e8_kissing", "clebsch16", "cross_polytope(7)", "simplex(6)", "cell24"}) {
    auto code = scdt::construct(name);
    auto v = scdt::rationality_verdict(code, scdt::classify(code));
    CHECK(v.all_rational);
    CHECK(v.exception == scdt::RationalityException::kNone);
  }
  auto e8 = scdt::e8_kissing();
  CHECK(scdt::rationality_verdict(e8, scdt::classify(e8)).theorem_applicable);

  auto ico = scdt::icosahedron();
  auto v = scdt::rationality_verdict(ico, scdt::classify(ico));
  CHECK_FALSE(v.all_rational);
  CHECK(v.theorem_applicable);
  CHECK(v.exception == scdt::RationalityException::kIcosahedron);
  const QuadExt r = QuadExt::sqrt_of(scdt::make_rational(1, 5));
  CHECK(v.irrational_values == std::vector<QuadExt>{r, -r});
  CHECK(ico.spectrum().values == std::vector<QuadExt>{r, -r, QuadExt(-1)});
}

TEST_CASE("600-cell lies outside the theorem") {
  auto c = scdt::cell600();
  auto p = scdt::classify(c);
  CHECK(p.t == 11);
  CHECK(p.s == 8);
  auto v = scdt::rationality_verdict(c, p);
  CHECK_FALSE(v.all_rational);
  CHECK_FALSE(v.theorem_applicable);
  CHECK(v.exception == scdt::RationalityException::kNone);
}

TEST_CASE("irrational applicable codes other than the icosahedron violate the theorem") {
  auto pent = pentagon();
  auto p = scdt::classify(pent);
  CHECK(p.t == 4);
  CHECK_FALSE(scdt::rationality_verdict(pent, p).theorem_applicable);
  // pretend the gate applies
  p.n = 3;
  p.s = 3;
  p.delsarte = true;
  CHECK_THROWS_AS(scdt::rationality_verdict(pent, p), scdt::TheoremViolation);
}

TEST_CASE("icosahedron isometry check") {
  CHECK(scdt::icosahedron_isometry_check(scdt::icosahedron()));
  CHECK_FALSE(scdt::icosahedron_isometry_check(scdt::cross_polytope(3)));
  auto cubo = cuboctahedron();
  CHECK(cubo.size() == 12);
  CHECK_FALSE(scdt::icosahedron_isometry_check(cubo));
  CHECK_FALSE(scdt::icosahedron_isometry_check(pentagon()));
}

TEST_CASE("s = 3 scan points") {
  auto p12 = scdt::s3_point(3, 12);
  CHECK(p12.b == scdt::make_rational(1, 5));
  CHECK(p12.b_squared == scdt::make_rational(1, 25));
  CHECK(p12.consistent);
  CHECK(p12.factor == 0);
  auto p13 = scdt::s3_point(3, 13);
  CHECK_FALSE(p13.consistent);
  CHECK(p13.b * p13.b != p13.b_squared);
  auto p56 = scdt::s3_point(7, 56);
  CHECK(p56.consistent);
  CHECK(p56.b == scdt::make_rational(1, 9));
}

TEST_CASE("s = 3 scan is consistent only at n^2 + n") {
  auto certs = scdt::scan_s3(3, 30);
  REQUIRE(certs.size() == 28);
  for (const auto& c : certs) {
    CHECK(c.consistent_sizes == std::vector<long>{static_cast<long>(c.n) * c.n + c.n});
    CHECK(c.inconsistent_count == c.size_max - c.size_min);
    CHECK_FALSE(c.contradiction);
    CHECK(step(c, "b").value == QuadExt(scdt::make_rational(1, c.n + 2)));
  }
  CHECK(certs[0].conclusion.find("icosahedron") != std::string::npos);
  CHECK(certs[4].conclusion.find("rational inner products -1, +-1/3") != std::string::npos);  // n = 7
  CHECK(certs[1].conclusion.find("excluded") != std::string::npos);                            // n = 4
  CHECK_THROWS(scdt::scan_s3(2, 4));
}

TEST_CASE("s = 4 scan certificates") {
  auto certs = scdt::scan_s45(4, 3, 30);
  for (const auto& c : certs) {
    CHECK(c.contradiction);
    CHECK(step(c, "6/(n+2)").value == QuadExt(scdt::make_rational(6, c.n + 2)));
  }
  CHECK(step(certs[2], "6/(n+2)").value == test::q("6/7"));  // n = 5
}

TEST_CASE("s = 5 scan certificates") {
  auto certs = scdt::scan_s45(5, 2, 30);
  REQUIRE(certs.size() == 29);
  CHECK_FALSE(certs[0].contradiction);  // n = 2
  CHECK(step(certs[0], "3|C|").value == QuadExt(36));
  CHECK(step(certs[0], "b^2").value == test::q("1/4"));
  CHECK(certs[0].conclusion.find("n = 2") != std::string::npos);
  CHECK(step(certs[1], "3|C|").value == test::q("280/3"));  // n = 3
  for (std::size_t i = 1; i < certs.size(); ++i) {
    const int n = certs[i].n;
    CHECK(certs[i].contradiction);
    CHECK(step(certs[i], "b^2").value == QuadExt(scdt::make_rational(4 - n, n + 6)));
    if (n >= 4) CHECK(step(certs[i], "b^2").value.sign() <= 0);
  }
  CHECK_THROWS(scdt::scan_s45(4, 2, 5));
  CHECK_THROWS(scdt::scan_s45(6, 3, 5));
}
