#pragma once

// Design strength, moment identities, the Delsarte-Goethals-Seidel bound and
// the Delsarte gate t >= 2s - 2.

#include <optional>
#include <vector>

#include "scdt/code.hpp"

namespace scdt {

/// f_j: 0 for odd j, f_0 = 1, f_{2i} = (2i-1)!! / (n (n+2) ... (n+2i-2)).
Rational moment_f(int n, int j);

enum class SumPath {
  kDistribution,  // global counts per spectrum value
  kPerPair,       // Q_k evaluated at every ordered pair
};

/// S_k = sum over ordered pairs (x, y) of Q_k(<x, y>), diagonal included.
QuadExt kernel_sum(const SphericalCode& code, int k, SumPath path, unsigned workers = 1);

struct StrengthReport {
  int t = 0;
  /// S_1 .. S_{kmax}, kmax = 2s + 1 or the first nonzero index.
  std::vector<QuadExt> sums;
  std::optional<int> first_nonzero;
  QuadExt first_nonzero_value;
  /// All of S_1..S_{2s+1} vanished, contradicting t <= 2s.
  bool cap_anomaly = false;
};

/// Largest t <= 2s+1 with S_1 = ... = S_t = 0. Uniform codes sum over the
/// distance distribution, others pair by pair.
StrengthReport design_strength(const SphericalCode& code, unsigned workers = 1);

/// Per-point residuals sum_i a_i^j A_{a_i}(x) - (f_j |C| - 1).
std::vector<QuadExt> check_syst1(const SphericalCode& code, int j);

/// C(n+m-1-e, n-1) + C(n+m-2, n-1) with t = 2m - e, e in {0, 1}.
Integer dgs_bound(int n, int t);

struct DesignProfile {
  int n = 0;
  std::size_t size = 0;
  std::size_t s = 0;
  int t = 0;
  StrengthReport strength;
  bool antipodal = false;
  /// A(C) together with 1 is symmetric about 0.
  bool symmetric_spectrum = false;
  bool delsarte = false;
  bool tight = false;
  Integer dgs_bound;
  bool uniform = false;
  /// t <= 2s, and t <= 2s - 1 when the spectrum is symmetric.
  bool strength_bound_ok = true;
};

DesignProfile classify(const SphericalCode& code, unsigned workers = 1);

}  // namespace scdt
