#pragma once

#include <vector>

#include "scdt/polynomial.hpp"

namespace scdt {

/// Binomial coefficient C(a, b); zero when b < 0 or b > a or a < 0.
Integer binomial(long a, long b);

/// Dimension of the space of degree-k homogeneous harmonic polynomials in
/// n variables: C(n+k-1, k) - C(n+k-3, k-2).
Integer harmonic_dimension(int n, int k);

/// Gegenbauer polynomial Q_k for the sphere S^{n-1}, normalized Q_k(1) = 1,
/// from the three-term recurrence
///   (k+n-2) Q_{k+1} = (2k+n-2) u Q_k - k Q_{k-1}.
Polynomial gegenbauer(int n, int k);

/// All Q_0..Q_kmax for one dimension.
std::vector<Polynomial> gegenbauer_family(int n, int kmax);

/// Jacobi polynomial P_i^{(a,b)} with a = (n-1)/2, b = (n-3)/2, scaled so
/// that P_i(1) = 1.
Polynomial jacobi_adjacent(int n, int i);

struct GegenbauerExpansion {
  int dim = 0;
  std::vector<QuadExt> g;  // g_0..g_deg

  /// Sum_k g_k Q_k as a polynomial in u.
  Polynomial to_polynomial() const;
};

/// Coefficients of p in the basis Q_0..Q_deg (triangular solve from the top
/// degree down). Throws for the zero polynomial.
GegenbauerExpansion gegenbauer_expand(const Polynomial& p, int n);

}  // namespace scdt
