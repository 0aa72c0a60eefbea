#include "scdt/lp_bounds.hpp"

#include <algorithm>
#include <string>

namespace scdt {

LevenshteinPolynomial levenshtein_polynomial(int n, int s, const QuadExt& r) {
  if (n < 3) throw BoundError("levenshtein_polynomial: n must be at least 3");
  if (s < 1) throw BoundError("levenshtein_polynomial: s must be at least 1");
  if (r <= QuadExt(-1) || r >= QuadExt(1)) throw BoundError("levenshtein_polynomial: r must lie in (-1, 1)");
  const Polynomial ps = jacobi_adjacent(n, s);
  const Polynomial ps1 = jacobi_adjacent(n, s - 1);
  LevenshteinPolynomial out;
  out.n = n;
  out.s = s;
  out.r = r;
  out.poly = ps * ps1(r) - ps1 * ps(r);
  if (out.poly.degree() != s) {
    throw BoundError("levenshtein_polynomial: P_" + std::to_string(s - 1) + "(r) = 0 collapses the degree");
  }
  return out;
}

bool RootMatch::matched() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const QuadExt& v) { return v.is_zero(); });
}

RootMatch verify_root_match(const SphericalCode& code, const DesignProfile& profile) {
  const int s = static_cast<int>(profile.s);
  if (profile.t < 2 * s - 1) {
    throw BoundError("verify_root_match: needs an s-distance (2s-1)-design, got s = " + std::to_string(s) +
                     ", t = " + std::to_string(profile.t));
  }
  const auto& values = code.spectrum().values;
  RootMatch m{levenshtein_polynomial(code.dim(), s, values.front()), {}};
  for (const auto& a : values) m.residuals.push_back(m.levenshtein.poly(a));
  return m;
}

RootMatch verify_root_match(const SphericalCode& code, unsigned workers) {
  return verify_root_match(code, classify(code, workers));
}

const char* to_string(PairSumVerdict v) {
  switch (v) {
    case PairSumVerdict::kHolds: return "holds";
    case PairSumVerdict::kFails: return "fails";
    case PairSumVerdict::kNotApplicable: return "not applicable (tight)";
  }
  return "";
}

PairSumResult pair_sum_lemma(const std::vector<QuadExt>& roots, bool tight) {
  PairSumResult out;
  if (tight) return out;
  out.verdict = PairSumVerdict::kHolds;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i; j < roots.size(); ++j) {
      if ((roots[i] + roots[j]).is_zero()) {
        out.verdict = PairSumVerdict::kFails;
        out.witness = {i, j};
        return out;
      }
    }
  }
  return out;
}

LPCertificate lp_certificate(const SphericalCode& code) {
  const auto& values = code.spectrum().values;
  LPCertificate c;
  const bool antipodal_value = values.back() == QuadExt(-1);
  c.linear_root = antipodal_value ? values.back() : values.front();
  Polynomial g = Polynomial::linear_factor(c.linear_root);
  for (const auto& a : values) {
    if (a == c.linear_root) continue;
    Polynomial f = Polynomial::linear_factor(a);
    g *= f * f;
  }
  g.set_context_dim(code.dim());
  c.poly = g;
  c.g = gegenbauer_expand(g, code.dim());
  c.g0_positive = c.g.g[0].sign() > 0;
  c.coefficients_nonnegative = true;
  for (std::size_t k = 1; k < c.g.g.size(); ++k) {
    if (c.g.g[k].sign() < 0) {
      c.coefficients_nonnegative = false;
      c.offending_k = static_cast<int>(k);
      break;
    }
  }
  c.vanishes_on_spectrum =
      std::all_of(values.begin(), values.end(), [&](const QuadExt& a) { return g(a).is_zero(); });
  if (c.g0_positive) c.bound = g(QuadExt(1)) / c.g.g[0];
  c.attained = c.g0_positive && c.coefficients_nonnegative && c.vanishes_on_spectrum &&
               c.bound == QuadExt(static_cast<long>(code.size()));
  return c;
}

BannaiResult bannai_inequality(int n, int s) {
  if (n < 3 || s < 2) throw BoundError("bannai_inequality: needs n >= 3 and s >= 2");
  BannaiResult b;
  b.n = n;
  b.s = s;
  b.lhs = Rational(n);
  b.rhs = Rational(harmonic_dimension(n, s - 1)) * (Rational(1) - make_rational(s - 1, n + 2 * (s - 1) - 2));
  b.holds = b.lhs >= b.rhs;
  return b;
}

}  // namespace scdt
