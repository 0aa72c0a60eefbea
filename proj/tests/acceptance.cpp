// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scdt/catalog.hpp"
#include "scdt/design.hpp"
#include "scdt/lp_bounds.hpp"
#include "scdt/orthopoly.hpp"
#include "scdt/rationality.hpp"
#include "scdt/report.hpp"
#include "scdt/scheme.hpp"

using namespace scdt;

namespace {

struct Criterion {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

const std::vector<std::string> kDelsarte{"icosahedron", "clebsch16", "e8_kissing", "cross_polytope(3)",
                                         "simplex(3)"};

std::vector<std::string> corpus(bool extended) {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries(extended)) out.push_back(e.name);
  return out;
}

QuadExt qr(long a, long b) { return QuadExt(make_rational(a, b)); }

void c1(Criterion& c) {
  for (const auto& name : corpus(true)) {
    auto code = construct(name);
    auto p = classify(code);
    if (!(p.n >= 3 && p.s >= 3 && p.t >= 2 * static_cast<int>(p.s) - 2)) continue;
    bool rational = true;
    for (const auto& a : code.spectrum().values) rational = rational && a.is_rational();
    c.expect(rational || icosahedron_isometry_check(code), name + " irrational and not the icosahedron");
    auto v = rationality_verdict(code, p);
    c.expect(v.all_rational == rational, name + " verdict");
  }
  auto ico = icosahedron();
  const QuadExt r = QuadExt::sqrt_of(make_rational(1, 5));
  auto v = rationality_verdict(ico, classify(ico));
  c.expect(v.exception == RationalityException::kIcosahedron, "icosahedron not flagged");
  c.expect(ico.spectrum().values == std::vector<QuadExt>{r, -r, QuadExt(-1)}, "icosahedron products");
}

void c2(Criterion& c) {
  for (int n = 3; n <= 10; ++n) {
    c.expect(design_strength(simplex(n)).t == 2, "simplex(" + std::to_string(n) + ")");
    c.expect(design_strength(cross_polytope(n)).t == 3, "cross_polytope(" + std::to_string(n) + ")");
  }
  const std::vector<std::pair<std::string, int>> want{
      {"clebsch16", 3}, {"icosahedron", 5}, {"cell24", 5}, {"e8_kissing", 7}};
  for (const auto& [name, t] : want) c.expect(design_strength(construct(name)).t == t, name);
  auto s = design_strength(cross_polytope(3));
  c.expect(s.first_nonzero == 4 && s.first_nonzero_value == QuadExt(21), "S_4 of cross_polytope(3)");
}

void c3(Criterion& c) {
  c.expect(dgs_bound(3, 5) == 12, "DGS(3,5)");
  for (int n = 3; n <= 10; ++n) c.expect(dgs_bound(n, 3) == 2 * n, "DGS(n,3)");
  c.expect(dgs_bound(8, 7) == 240, "DGS(8,7)");
  c.expect(dgs_bound(5, 3) == 10, "DGS(5,3)");
  for (const char* name : {"icosahedron", "e8_kissing", "cross_polytope(3)", "cross_polytope(10)"}) {
    c.expect(classify(construct(name)).tight, std::string(name) + " not tight");
  }
  c.expect(!classify(clebsch16()).tight, "clebsch16 tight");
}

void c4(Criterion& c) {
  for (const auto& name : corpus(false)) {
    auto code = construct(name);
    auto p = classify(code);
    if (!p.delsarte) continue;
    for (int j = 1; j <= p.t; ++j) {
      for (const auto& r : check_syst1(code, j)) c.expect(r.is_zero(), name + " syst1 j=" + std::to_string(j));
    }
  }
  auto e8 = e8_kissing();
  for (int e : {2, 4, 6}) {
    QuadExt acc(0);
    for (std::size_t y = 1; y < e8.size(); ++y) {
      QuadExt pw(1);
      for (int k = 0; k < e; ++k) pw *= e8.gram(0, y);
      acc += pw;
    }
    const QuadExt want = e == 2 ? QuadExt(29) : e == 4 ? QuadExt(8) : qr(11, 4);
    c.expect(acc == want, "E8 moment " + std::to_string(e));
  }
}

void c5(Criterion& c) {
  for (const auto& name : kDelsarte) {
    auto code = construct(name);
    auto built = try_build_scheme(code);
    c.expect(std::holds_alternative<SchemeTables>(built), name + " constancy");
    if (!std::holds_alternative<SchemeTables>(built)) continue;
    const auto& t = std::get<SchemeTables>(built);
    QuadExt sum(0);
    for (std::size_t k = 0; k < t.classes; ++k) {
      c.expect(t.mult[k] == QuadExt(Rational(harmonic_dimension(code.dim(), static_cast<int>(k)))),
               name + " multiplicity");
      sum += t.mult[k];
    }
    c.expect(t.mult.back() == QuadExt(static_cast<long>(code.size())) - sum, name + " last multiplicity");
    auto v = verify_tables(t);
    c.expect(v.idempotency && v.krein_nonnegative && v.krein_identity, name + " tables");
  }
  c.expect(build_scheme(icosahedron()).mult == std::vector<QuadExt>{1L, 3L, 5L, 3L}, "icosahedron multiplicities");
  c.expect(build_scheme(e8_kissing()).mult == std::vector<QuadExt>{1L, 8L, 35L, 112L, 84L}, "E8 multiplicities");
}

void c6(Criterion& c) {
  for (const auto& name : kDelsarte) {
    auto rep = qpoly_orderings(build_scheme(construct(name)));
    c.expect(rep.natural_ordering_qpoly, name + " natural ordering");
    c.expect(rep.total_qpoly <= 2, name + " more than two orderings");
  }
  auto ico = qpoly_orderings(build_scheme(icosahedron()));
  c.expect(ico.alternates.size() == 1, "icosahedron alternates");
  if (ico.alternates.size() == 1) {
    c.expect(ico.alternates[0].order == std::vector<std::size_t>{0, 3, 2, 1}, "icosahedron alternate order");
    c.expect(ico.alternates[0].suzuki_class == SuzukiClass::kIII, "icosahedron Suzuki class");
  }
}

void c7(Criterion& c) {
  auto g = galois_action(build_scheme(icosahedron()));
  c.expect(!g.identity && g.permutation == std::vector<std::size_t>{0, 3, 2, 1}, "icosahedron (E1 E3)");
  for (const auto& name : corpus(false)) {
    if (name == "icosahedron") continue;
    auto code = construct(name);
    auto built = try_build_scheme(code);
    if (!std::holds_alternative<SchemeTables>(built)) continue;
    c.expect(galois_action(std::get<SchemeTables>(built)).identity, name + " galois not identity");
  }
}

void c8(Criterion& c) {
  std::vector<std::string> names{"clebsch16", "icosahedron", "e8_kissing"};
  for (int n = 3; n <= 10; ++n) names.push_back("cross_polytope(" + std::to_string(n) + ")");
  for (const auto& name : names) {
    auto code = construct(name);
    auto m = verify_root_match(code);
    c.expect(m.levenshtein.r == code.spectrum().values.front(), name + " r");
    for (const auto& r : m.residuals) c.expect(r.is_zero(), name + " residual");
    auto p = classify(code);
    auto ps = pair_sum_lemma(code.spectrum().values, p.tight);
    if (name == "clebsch16") {
      c.expect(ps.verdict == PairSumVerdict::kHolds, "clebsch16 pair-sum");
    } else {
      c.expect(ps.verdict == PairSumVerdict::kNotApplicable, name + " pair-sum not n/a");
    }
  }
}

void c9(Criterion& c) {
  for (const auto& name : kDelsarte) {
    auto code = construct(name);
    auto cert = lp_certificate(code);
    c.expect(cert.coefficients_nonnegative && cert.g0_positive, name + " coefficients");
    c.expect(cert.bound == QuadExt(static_cast<long>(code.size())), name + " bound");
  }
  auto cl = lp_certificate(clebsch16());
  c.expect(cl.g.g == std::vector<QuadExt>{qr(16, 125), qr(96, 175), qr(4, 5), qr(4, 7)}, "clebsch16 certificate");
  c.expect(cl.bound == QuadExt(16), "clebsch16 bound");
}

void c10(Criterion& c) {
  for (const auto& cert : scan_s3(3, 30)) {
    c.expect(cert.consistent_sizes == std::vector<long>{static_cast<long>(cert.n) * cert.n + cert.n},
             "s3 n=" + std::to_string(cert.n));
  }
  for (const auto& cert : scan_s45(4, 3, 30)) {
    bool seen = false;
    for (const auto& st : cert.steps) {
      if (st.name == "6/(n+2)") seen = st.value == qr(6, cert.n + 2) && st.value != QuadExt(2);
    }
    c.expect(cert.contradiction && seen, "s4 n=" + std::to_string(cert.n));
  }
  for (const auto& cert : scan_s45(5, 3, 30)) {
    bool seen = false;
    for (const auto& st : cert.steps) {
      if (st.name == "b^2") seen = st.value == qr(4 - cert.n, cert.n + 6) && (cert.n < 4 || st.value.sign() <= 0);
    }
    c.expect(cert.contradiction && seen, "s5 n=" + std::to_string(cert.n));
  }
  c.expect(bannai_inequality(3, 3).holds, "bannai (3,3)");
  for (int n = 4; n <= 50; ++n) c.expect(!bannai_inequality(n, 3).holds, "bannai s=3");
  for (int s : {4, 5}) {
    for (int n = 3; n <= 50; ++n) c.expect(!bannai_inequality(n, s).holds, "bannai s=4,5");
  }
}

void c11(Criterion& c) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
  std::uniform_int_distribution<int> pick(0, 5);
  const std::int64_t radicands[] = {2, 3, 5, 6, 7, 10};
  auto rnd = [&](std::int64_t d) {
    return QuadExt::normalize(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), d);
  };
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t d = radicands[pick(rng)];
    const QuadExt a = rnd(d), b = rnd(d), e = rnd(d);
    bool ok = (a + b) + e == a + (b + e) && a * b == b * a && (a * b) * e == a * (b * e) &&
              a * (b + e) == a * b + a * e && a + QuadExt(0) == a && a * QuadExt(1) == a && a - a == QuadExt(0);
    if (!b.is_zero()) ok = ok && (a / b) * b == a;
    ok = ok && (a * b).conj() == a.conj() * b.conj() && (a + b).conj() == a.conj() + b.conj();
    c.expect(ok, "field axioms case " + std::to_string(i));
  }
  for (int n = 2; n <= 12; ++n) {
    for (int k = 0; k <= 10; ++k) {
      c.expect(gegenbauer(n, k)(QuadExt(1)) == QuadExt(1), "Q_k(1)");
      c.expect(jacobi_adjacent(n, k)(QuadExt(1)) == QuadExt(1), "P_k(1)");
      auto p = gegenbauer(n, k) * QuadExt(3) + jacobi_adjacent(n, k);
      c.expect(gegenbauer_expand(p, n).to_polynomial() == p, "expansion round trip");
    }
  }
  for (const auto& name : corpus(false)) {
    auto code = construct(name);
    for (int k = 1; k <= 8; ++k) c.expect(kernel_sum(code, k, SumPath::kDistribution).sign() >= 0, name + " S_k < 0");
  }
  for (const char* name : {"icosahedron", "clebsch16", "cell24"}) {
    auto code = construct(name);
    ReportOptions one, many;
    many.workers = 4;
    c.expect(analyze_report(code, one).text == analyze_report(code, many).text, std::string(name) + " determinism");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"main theorem on the corpus", c1},
      {"design strengths", c2},
      {"DGS bound and tightness", c3},
      {"moment identities", c4},
      {"scheme layer", c5},
      {"Q-polynomial orderings", c6},
      {"Galois action", c7},
      {"Levenshtein root match and pair-sum lemma", c8},
      {"LP certificates", c9},
      {"parametric scans and Bannai inequality", c10},
      {"property suites", c11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!c.ok) std::cout << " (" << c.why.str() << ")";
    std::cout << "\n";
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
