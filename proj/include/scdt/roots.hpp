#pragma once

#include <optional>
#include <vector>

#include "scdt/polynomial.hpp"

namespace scdt {

/// A real root, exact when it lies in Q or Q(sqrt(d)), otherwise known only
/// through a rational isolating interval (lo, hi) of `witness`, a squarefree
/// rational polynomial with exactly one root there.
struct RealRoot {
  std::optional<QuadExt> exact;
  Rational lo;
  Rational hi;
  Polynomial witness;

  bool is_exact() const { return exact.has_value(); }
  /// Shrinks the isolating interval below `width` (no-op for exact roots).
  void refine(const Rational& width);
  /// -1, 0, 1 for root < x, root == x, root > x.
  int compare_to(const Rational& x);
};

/// Number of distinct real roots of a rational polynomial in (a, b].
std::size_t sturm_count(const Polynomial& p, const Rational& a, const Rational& b);

/// Every distinct real root of p, ascending. Roots are exact when their
/// minimal polynomial over Q has degree <= 2; quadratic factors are found by
/// rational reconstruction of root sums and products, then confirmed by
/// exact division. Throws for the zero polynomial.
std::vector<RealRoot> isolate_real_roots(const Polynomial& p);

/// The roots of p in [-1, 1), ascending.
std::vector<RealRoot> isolate_roots(const Polynomial& p);

}  // namespace scdt
