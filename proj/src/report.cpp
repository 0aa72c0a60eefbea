#include "scdt/report.hpp"

#include <cstdio>
#include <sstream>

#include "scdt/design.hpp"
#include "scdt/lp_bounds.hpp"
#include "scdt/rationality.hpp"
#include "scdt/scheme.hpp"

namespace scdt {

namespace {

constexpr std::size_t kDenseLimit = 64;

std::string join(const std::vector<QuadExt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_literal(v[i]);
  return out;
}

template <class T>
std::string join_ints(const std::vector<T>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

const char* yes(bool b) { return b ? "yes" : "no"; }
const char* ok(bool b) { return b ? "ok" : "FAILED"; }

std::string decimal(const QuadExt& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x.to_double());
  return buf;
}

class Builder {
 public:
  std::ostringstream out;
  int exit_code = 0;

  void violation(const std::string& what) {
    exit_code = 1;
    violations_.push_back(what);
  }
  Report finish() {
    if (violations_.empty()) {
      out << "verdict: ok\n";
    } else {
      for (const auto& v : violations_) out << "violation: " << v << "\n";
      out << "verdict: violated\n";
    }
    return {out.str(), exit_code};
  }

 private:
  std::vector<std::string> violations_;
};

void profile_section(Builder& b, const SphericalCode& code, const DesignProfile& p) {
  auto& o = b.out;
  o << "profile:\n";
  o << "  n: " << p.n << "\n";
  o << "  size: " << p.size << "\n";
  o << "  s: " << p.s << "\n";
  o << "  spectrum: " << join(code.spectrum().values) << "\n";
  const auto dd = distance_distribution(code);
  if (dd.uniform) {
    o << "  distribution: uniform " << join_ints(dd.common()) << "\n";
  } else {
    o << "  distribution: non-uniform\n";
  }
  o << "  t: " << p.t << "\n";
  if (p.strength.first_nonzero) {
    o << "  first nonzero moment: S_" << *p.strength.first_nonzero << " = " << to_literal(p.strength.first_nonzero_value)
      << "\n";
  }
  o << "  antipodal: " << yes(p.antipodal) << "\n";
  o << "  dgs bound: " << p.dgs_bound.get_str() << "\n";
  o << "  tight: " << yes(p.tight) << "\n";
  o << "  delsarte: " << yes(p.delsarte) << "\n";
  if (p.strength.cap_anomaly) b.violation("S_1 .. S_" + std::to_string(2 * p.s + 1) + " all vanish");
  if (!p.strength_bound_ok) b.violation("strength exceeds the bound t <= 2s (2s-1 for symmetric spectra)");
}

void expected_section(Builder& b, const DesignProfile& p, const SphericalCode& code, const ExpectedProfile& e) {
  std::vector<std::string> diffs;
  if (p.n != e.n) diffs.push_back("n");
  if (p.size != e.size) diffs.push_back("size");
  if (p.s != e.s) diffs.push_back("s");
  if (p.t != e.t) diffs.push_back("t");
  if (p.tight != e.tight) diffs.push_back("tight");
  if (p.delsarte != e.delsarte) diffs.push_back("delsarte");
  if (code.spectrum().values != e.spectrum) diffs.push_back("spectrum");
  if (diffs.empty()) {
    b.out << "expected profile: match\n";
    return;
  }
  std::string list;
  for (const auto& d : diffs) list += (list.empty() ? "" : ", ") + d;
  b.out << "expected profile: mismatch in " << list << "\n";
  b.violation("catalog profile mismatch (" + list + ")");
}

void scheme_sections(Builder& b, const SphericalCode& code, const DesignProfile& p, const ReportOptions& opt) {
  auto& o = b.out;
  SchemeOptions so;
  so.workers = opt.workers;
  std::variant<SchemeTables, ConstancyFailure> built;
  try {
    built = try_build_scheme(code, so);
  } catch (const FieldError& e) {
    o << "scheme: idempotents unavailable (" << e.what() << ")\n";
    if (p.delsarte) b.violation("scheme idempotents unavailable on a Delsarte code");
    return;
  }
  if (auto* f = std::get_if<ConstancyFailure>(&built)) {
    o << "scheme: " << f->describe() << "\n";
    if (p.delsarte) b.violation("Delsarte code without an association scheme");
    return;
  }
  const auto& t = std::get<SchemeTables>(built);
  const auto checks = verify_tables(t);
  o << "scheme:\n";
  o << "  idempotents: " << (t.source == IdempotentSource::kGegenbauer ? "gegenbauer" : "spectral") << "\n";
  o << "  multiplicities: " << join(t.mult) << "\n";
  o << "  resolution: " << ok(checks.resolution) << "\n";
  o << "  idempotency: " << ok(checks.idempotency) << "\n";
  o << "  multiplicities integral: " << ok(checks.multiplicities) << "\n";
  o << "  krein identity: " << ok(checks.krein_identity) << "\n";
  o << "  krein nonnegative: " << ok(checks.krein_nonnegative) << "\n";
  if (p.delsarte) {
    o << "  harmonic ranks: " << ok(checks.harmonic_ranks) << "\n";
    o << "  rational middle idempotents: " << ok(checks.rational_middle) << "\n";
  }
  if (opt.deep && code.size() <= kDenseLimit) {
    const bool dense = dense_cross_check(code, t);
    o << "  dense cross-check: " << ok(dense) << "\n";
    if (!dense) b.violation("dense cross-check");
  }
  if (!checks.all()) b.violation("scheme table identities");
  if (p.delsarte && !(checks.harmonic_ranks && checks.rational_middle)) b.violation("Delsarte scheme structure");

  const auto ord = qpoly_orderings(t);
  o << "orderings:\n";
  o << "  natural: " << (ord.natural_ordering_qpoly ? "q-polynomial" : "not q-polynomial") << "\n";
  for (const auto& alt : ord.alternates) {
    o << "  alternate: " << join_ints(alt.order) << " suzuki ";
    if (alt.ambiguous) {
      o << "ambiguous";
      for (auto c : alt.matches) o << " " << to_string(c);
    } else {
      o << to_string(alt.suzuki_class);
    }
    o << "\n";
  }
  o << "  total: " << ord.total_qpoly << "\n";
  if (p.delsarte) {
    if (!ord.natural_ordering_qpoly) b.violation("natural ordering of a Delsarte scheme is not Q-polynomial");
    if (!ord.within_suzuki_bound) b.violation("more than two Q-polynomial structures");
    for (const auto& alt : ord.alternates) {
      if (alt.matches.empty()) b.violation("alternate ordering outside the Suzuki list");
    }
  }

  const auto g = galois_action(t);
  o << "galois: ";
  if (g.anomaly) {
    o << "anomaly (conjugate table is not a permutation)\n";
    b.violation("Galois image is not a permutation of the idempotents");
  } else if (g.identity) {
    o << "identity\n";
  } else {
    std::vector<bool> seen(g.permutation.size(), false);
    for (std::size_t k = 0; k < g.permutation.size(); ++k) {
      if (seen[k] || g.permutation[k] == k) continue;
      std::vector<std::size_t> cycle;
      for (std::size_t j = k; !seen[j]; j = g.permutation[j]) {
        seen[j] = true;
        cycle.push_back(j);
      }
      o << "(E" << join_ints(cycle, " E") << ")";
    }
    o << " over sqrt(" << g.radicand << ")\n";
  }
}

void levenshtein_section(Builder& b, const SphericalCode& code, const DesignProfile& p) {
  auto& o = b.out;
  const int s = static_cast<int>(p.s);
  if (p.t < 2 * s - 1 || code.dim() < 3) {
    o << "levenshtein: not applicable (t < 2s-1)\n";
    return;
  }
  o << "levenshtein:\n";
  try {
    const auto m = verify_root_match(code, p);
    o << "  r: " << to_literal(m.levenshtein.r) << "\n";
    o << "  polynomial: " << to_string(m.levenshtein.poly) << "\n";
    o << "  residuals: " << join(m.residuals) << "\n";
    o << "  roots match spectrum: " << yes(m.matched()) << "\n";
    if (!m.matched()) b.violation("inner products are not the Levenshtein roots");
  } catch (const BoundError& e) {
    o << "  error: " << e.what() << "\n";
    b.violation(e.what());
  }
  const auto ps = pair_sum_lemma(code.spectrum().values, p.tight);
  o << "  pair-sum lemma: " << to_string(ps.verdict) << "\n";
  if (ps.verdict == PairSumVerdict::kFails) b.violation("pair-sum lemma fails on a non-tight sharp code");
}

void lp_section(Builder& b, const SphericalCode& code, const DesignProfile& p) {
  auto& o = b.out;
  const auto c = lp_certificate(code);
  o << "lp:\n";
  o << "  polynomial: " << to_string(c.poly) << "\n";
  o << "  gegenbauer coefficients: " << join(c.g.g) << "\n";
  o << "  g0 positive: " << yes(c.g0_positive) << "\n";
  o << "  coefficients nonnegative: " << yes(c.coefficients_nonnegative);
  if (c.offending_k) o << " (g_" << *c.offending_k << " < 0)";
  o << "\n";
  if (c.g0_positive) o << "  bound: " << to_literal(c.bound) << "\n";
  o << "  attained: " << yes(c.attained) << "\n";
  if (p.t >= 2 * static_cast<int>(p.s) - 1 && !c.attained) b.violation("LP certificate not attained");
}

void rationality_section(Builder& b, const SphericalCode& code, const DesignProfile& p) {
  auto& o = b.out;
  o << "rationality:\n";
  try {
    const auto v = rationality_verdict(code, p);
    o << "  theorem applicable: " << yes(v.theorem_applicable) << "\n";
    o << "  all rational: " << yes(v.all_rational) << "\n";
    if (!v.all_rational) o << "  irrational: " << join(v.irrational_values) << "\n";
    o << "  exception: " << (v.exception == RationalityException::kIcosahedron ? "icosahedron" : "none") << "\n";
  } catch (const TheoremViolation& e) {
    o << "  theorem violated: " << e.what() << "\n";
    b.violation(e.what());
  }
}

void approx_section(Builder& b, const SphericalCode& code) {
  auto& o = b.out;
  o << "approx (untrusted):\n";
  o << "  spectrum:";
  for (const auto& a : code.spectrum().values) o << " " << decimal(a);
  o << "\n";
}

}  // namespace

Report analyze_report(const SphericalCode& code, const ReportOptions& options,
                      const std::optional<ExpectedProfile>& expected) {
  Builder b;
  b.out << "code: " << code.label() << "\n";
  const auto p = classify(code, options.workers);
  profile_section(b, code, p);
  if (expected) expected_section(b, p, code, *expected);
  if (code.dim() >= 3) {
    scheme_sections(b, code, p, options);
    levenshtein_section(b, code, p);
    lp_section(b, code, p);
  }
  rationality_section(b, code, p);
  if (options.approx) approx_section(b, code);
  return b.finish();
}

Report scheme_report(const SphericalCode& code, const ReportOptions& options) {
  Builder b;
  auto& o = b.out;
  o << "code: " << code.label() << "\n";
  SchemeOptions so;
  so.workers = options.workers;
  auto built = try_build_scheme(code, so);
  if (auto* f = std::get_if<ConstancyFailure>(&built)) {
    o << "scheme: " << f->describe() << "\n";
    o << "witness: x=" << f->x << " y=" << f->y << " k=" << f->k << "\n";
    b.violation("not an association scheme");
    return b.finish();
  }
  const auto& t = std::get<SchemeTables>(built);
  const std::size_t r = t.rank();
  o << "classes: " << t.classes << "\n";
  o << "relations: " << join(t.relation_values) << "\n";
  for (std::size_t k = 0; k < r; ++k) {
    o << "p[.][.][" << k << "]:\n";
    for (std::size_t i = 0; i < r; ++i) {
      o << " ";
      for (std::size_t j = 0; j < r; ++j) o << " " << t.p_at(i, j, k);
      o << "\n";
    }
  }
  o << "evalues (row k = E_k on relations 0..s):\n";
  for (std::size_t k = 0; k < r; ++k) o << "  " << join(t.idempotent(k)) << "\n";
  o << "multiplicities: " << join(t.mult) << "\n";
  for (std::size_t k = 0; k < r; ++k) {
    o << "q[.][.][" << k << "]:\n";
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<QuadExt> row;
      for (std::size_t j = 0; j < r; ++j) row.push_back(t.q_at(i, j, k));
      o << "  " << join(row) << "\n";
    }
  }
  const auto checks = verify_tables(t);
  if (!checks.all()) b.violation("scheme table identities");
  if (options.deep && code.size() <= kDenseLimit && !dense_cross_check(code, t)) b.violation("dense cross-check");
  return b.finish();
}

Report bound_report(const SphericalCode& code, const ReportOptions& options) {
  Builder b;
  b.out << "code: " << code.label() << "\n";
  const auto p = classify(code, options.workers);
  b.out << "n: " << p.n << " size: " << p.size << " s: " << p.s << " t: " << p.t << "\n";
  if (code.dim() >= 3) levenshtein_section(b, code, p);
  lp_section(b, code, p);
  if (options.approx) approx_section(b, code);
  return b.finish();
}

Report scan_report(int s, int n_min, int n_max) {
  Builder b;
  auto& o = b.out;
  auto certs = s == 3 ? scan_s3(n_min, n_max) : scan_s45(s, n_min, n_max);
  for (const auto& c : certs) {
    o << "certificate s=" << c.s << " n=" << c.n << "\n";
    if (c.s == 3) {
      o << "  sizes: " << c.size_min << ".." << c.size_max << "\n";
      o << "  consistent: " << join_ints(c.consistent_sizes) << "\n";
      o << "  inconsistent: " << c.inconsistent_count << "\n";
      const long tight = static_cast<long>(c.n) * c.n + c.n;
      if (c.consistent_sizes != std::vector<long>{tight}) b.violation("s=3 consistency away from |C| = n^2+n");
    }
    for (const auto& st : c.steps) o << "  " << st.name << ": " << to_literal(st.value) << "\n";
    o << "  conclusion: " << c.conclusion << "\n";
    if (c.s != 3 && c.n >= 3 && !c.contradiction) b.violation("no contradiction at n=" + std::to_string(c.n));
    if (c.n >= 3) {
      const auto bi = bannai_inequality(c.n, s);
      o << "  bannai: " << to_literal(bi.lhs) << (bi.holds ? " >= " : " < ") << to_literal(bi.rhs) << " "
        << (bi.holds ? "holds" : "fails") << "\n";
    }
  }
  return b.finish();
}

Report catalog_list_report(bool extended) {
  Builder b;
  for (const auto& e : catalog_entries(extended)) {
    const auto& x = e.expected;
    b.out << e.name << " n=" << x.n << " size=" << x.size << " s=" << x.s << " t=" << x.t
          << " tight=" << yes(x.tight) << " delsarte=" << yes(x.delsarte) << " spectrum=" << join(x.spectrum)
          << (e.extended ? " [extended]" : "") << "\n";
  }
  return {b.out.str(), 0};
}

}  // namespace scdt
