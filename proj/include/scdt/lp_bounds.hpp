#pragma once

// Levenshtein polynomials, the pair-sum lemma for non-tight sharp codes,
// Delsarte LP attainment certificates and Bannai's multiplicity inequality.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scdt/code.hpp"
#include "scdt/design.hpp"
#include "scdt/orthopoly.hpp"

namespace scdt {

class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LevenshteinPolynomial {
  int n = 0;
  int s = 0;
  QuadExt r;
  /// P_s(u) P_{s-1}(r) - P_s(r) P_{s-1}(u)
  Polynomial poly;
};

/// Throws BoundError when P_{s-1}(r) = 0 (degree drops below s) or r is
/// outside (-1, 1).
LevenshteinPolynomial levenshtein_polynomial(int n, int s, const QuadExt& r);

struct RootMatch {
  LevenshteinPolynomial levenshtein;
  std::vector<QuadExt> residuals;  // f(a_i) for a_1 > ... > a_s
  bool matched() const;
};

/// r := max A(C); requires t >= 2s - 1, else BoundError.
RootMatch verify_root_match(const SphericalCode& code, unsigned workers = 1);
RootMatch verify_root_match(const SphericalCode& code, const DesignProfile& profile);

enum class PairSumVerdict { kHolds, kFails, kNotApplicable };
const char* to_string(PairSumVerdict v);

struct PairSumResult {
  PairSumVerdict verdict = PairSumVerdict::kNotApplicable;
  /// First pair (i, j), i <= j, 0-based, with roots[i] + roots[j] = 0.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

PairSumResult pair_sum_lemma(const std::vector<QuadExt>& roots, bool tight);

struct LPCertificate {
  /// Linear factor of g: -1 when -1 is an inner product, else max A(C).
  QuadExt linear_root;
  Polynomial poly;
  GegenbauerExpansion g;
  QuadExt bound;  // g(1) / g_0
  bool g0_positive = false;
  bool coefficients_nonnegative = false;
  std::optional<int> offending_k;  // smallest k >= 1 with g_k < 0
  bool vanishes_on_spectrum = false;
  bool attained = false;
};

/// g(u) = (u - r) prod_{a in A(C), a != r} (u - a)^2.
LPCertificate lp_certificate(const SphericalCode& code);

struct BannaiResult {
  int n = 0;
  int s = 0;
  Rational lhs;  // n
  Rational rhs;  // h_{n,s-1} (1 - (s-1)/(n+2s-4))
  bool holds = false;
};

BannaiResult bannai_inequality(int n, int s);

}  // namespace scdt
