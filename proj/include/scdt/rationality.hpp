#pragma once

// Rationality of inner products for Delsarte codes, the icosahedron
// exception, and exact replays of the parametric case analyses for s = 3, 4, 5.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scdt/code.hpp"
#include "scdt/design.hpp"

namespace scdt {

enum class RationalityException { kNone, kIcosahedron };

struct RationalityVerdict {
  bool all_rational = true;
  std::vector<QuadExt> irrational_values;
  RationalityException exception = RationalityException::kNone;
  /// n >= 3, s >= 3, t >= 2s - 2
  bool theorem_applicable = false;
};

/// Raised when an applicable code has an irrational inner product and is
/// not the icosahedron.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

RationalityVerdict rationality_verdict(const SphericalCode& code, const DesignProfile& profile);

/// n = 3, |C| = 12, A(C) = {1/sqrt(5), -1/sqrt(5), -1}, every point with
/// distribution (5, 5, 1). A parameter-level test, not congruence.
bool icosahedron_isometry_check(const SphericalCode& code);

/// One named exact quantity in a certificate.
struct ScanStep {
  std::string name;
  QuadExt value;
};

struct ScanCertificate {
  int s = 0;
  int n = 0;
  /// Cardinalities examined (s = 3 only), inclusive.
  long size_min = 0;
  long size_max = 0;
  /// Cardinalities at which the closed forms agree (s = 3 only).
  std::vector<long> consistent_sizes;
  long inconsistent_count = 0;
  std::vector<ScanStep> steps;
  bool contradiction = false;
  std::string conclusion;
};

/// For one (n, |C|): b from the degree-2 condition, b^2 from the degree-4
/// condition, and (n-1)(|C| - n^2 - n).
struct S3Point {
  Rational b;
  Rational b_squared;
  Rational factor;
  bool consistent = false;
};
S3Point s3_point(int n, long size);

/// |C| ranges over [n+2, 4n^2].
std::vector<ScanCertificate> scan_s3(int n_min, int n_max);
/// s in {4, 5}. For s = 5 the excluded n = 2 branch is reported when in range.
std::vector<ScanCertificate> scan_s45(int s, int n_min, int n_max);

}  // namespace scdt
