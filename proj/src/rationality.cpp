#include "scdt/rationality.hpp"

#include <stdexcept>

namespace scdt {

RationalityVerdict rationality_verdict(const SphericalCode& code, const DesignProfile& profile) {
  RationalityVerdict v;
  for (const auto& a : code.spectrum().values) {
    if (!a.is_rational()) v.irrational_values.push_back(a);
  }
  v.all_rational = v.irrational_values.empty();
  v.theorem_applicable = profile.n >= 3 && profile.s >= 3 && profile.delsarte;
  if (icosahedron_isometry_check(code)) v.exception = RationalityException::kIcosahedron;
  if (v.theorem_applicable && !v.all_rational && v.exception == RationalityException::kNone) {
    throw TheoremViolation("irrational inner product " + to_literal(v.irrational_values.front()) + " in '" +
                           code.label() + "', which is not the icosahedron");
  }
  return v;
}

bool icosahedron_isometry_check(const SphericalCode& code) {
  if (code.dim() != 3 || code.size() != 12) return false;
  const QuadExt r = QuadExt::sqrt_of(make_rational(1, 5));
  const std::vector<QuadExt> expected{r, -r, QuadExt(-1)};
  if (code.spectrum().values != expected) return false;
  const auto dd = distance_distribution(code);
  return dd.uniform && dd.common() == std::vector<std::size_t>{5, 5, 1};
}

S3Point s3_point(int n, long size) {
  S3Point p;
  const Rational c(size);
  p.b = (c - 2 * n) / (Rational(n) * (c - 2));
  p.b_squared = (3 * c - 2 * n * (n + 2)) / (Rational(n) * (n + 2) * (c - 2));
  p.factor = Rational(n - 1) * (c - Rational(n) * n - n);
  p.consistent = p.b * p.b == p.b_squared;
  return p;
}

namespace {

bool is_square(long v, long& root) {
  if (v < 0) return false;
  Integer r = sqrt(Integer(v));
  root = r.get_si();
  return root * root == v;
}

}  // namespace

std::vector<ScanCertificate> scan_s3(int n_min, int n_max) {
  if (n_min < 3) throw std::invalid_argument("scan_s3: n must be at least 3");
  std::vector<ScanCertificate> out;
  for (int n = n_min; n <= n_max; ++n) {
    ScanCertificate cert;
    cert.s = 3;
    cert.n = n;
    cert.size_min = n + 2;
    cert.size_max = 4L * n * n;
    for (long size = cert.size_min; size <= cert.size_max; ++size) {
      S3Point p = s3_point(n, size);
      // the closed-form consistency must coincide with the factored form
      if (p.consistent != (p.factor == 0)) throw std::logic_error("scan_s3: factorization identity failed");
      if (p.consistent) {
        cert.consistent_sizes.push_back(size);
      } else {
        ++cert.inconsistent_count;
      }
    }
    const long tight = static_cast<long>(n) * n + n;
    S3Point at = s3_point(n, tight);
    cert.steps.push_back({"|C|", QuadExt(Rational(tight))});
    cert.steps.push_back({"b", QuadExt(at.b)});
    cert.steps.push_back({"b^2", QuadExt(at.b_squared)});
    cert.steps.push_back({"inner product", QuadExt::sqrt_of(at.b)});
    long m = 0;
    cert.contradiction = false;
    if (n == 3) {
      cert.conclusion = "tight 5-design with inner products -1, +-1/sqrt(5): icosahedron";
    } else if (is_square(n + 2, m)) {
      cert.conclusion = "tight 5-design with rational inner products -1, +-1/" + std::to_string(m);
    } else {
      cert.conclusion = "tight 5-design with irrational +-1/sqrt(" + std::to_string(n + 2) +
                        ") excluded: tight 5-designs need n = 3 or n + 2 a square";
    }
    out.push_back(std::move(cert));
  }
  return out;
}

namespace {

// Case with two rational products a, b (a^2 != b^2, ab != 0): the degree-1
// and degree-3 conditions fix X, Y; returns Xa^5 + Yb^5 - (a^2b^2 - a^2 - b^2).
Rational two_value_identity_gap(const Rational& a, const Rational& b) {
  const Rational a2 = a * a, b2 = b * b;
  const Rational x = -(1 - b2) / (a * (a2 - b2));
  const Rational y = -(1 - a2) / (b * (b2 - a2));
  if (x * a + y * b != -1 || x * a * a2 + y * b * b2 != -1) throw std::logic_error("two-value solve failed");
  return x * a * a2 * a2 + y * b * b2 * b2 - (a2 * b2 - a2 - b2);
}

Rational three_value_identity_gap(const Rational& a, const Rational& b, const Rational& c) {
  const Rational a2 = a * a, b2 = b * b, c2 = c * c;
  const Rational x = -(1 - b2) * (1 - c2) / (a * (a2 - b2) * (a2 - c2));
  const Rational y = -(1 - a2) * (1 - c2) / (b * (b2 - a2) * (b2 - c2));
  const Rational z = -(1 - a2) * (1 - b2) / (c * (c2 - b2) * (c2 - a2));
  auto moment = [&](int e) -> Rational {
    Rational pa(1), pb(1), pc(1);
    for (int i = 0; i < e; ++i) {
      pa *= a;
      pb *= b;
      pc *= c;
    }
    return x * pa + y * pb + z * pc;
  };
  if (moment(1) != -1 || moment(3) != -1 || moment(5) != -1) throw std::logic_error("three-value solve failed");
  return moment(7) - (-a2 - b2 - c2 + a2 * b2 + a2 * c2 + b2 * c2 - a2 * b2 * c2);
}

ScanCertificate scan_s4_at(int n) {
  ScanCertificate cert;
  cert.s = 4;
  cert.n = n;
  const Rational irr = make_rational(3, n + 2);
  cert.steps.push_back({"irrational b^2", QuadExt(irr)});

  const Rational a = make_rational(-1, n + 1), b = make_rational(2, n + 3);
  cert.steps.push_back({"generic identity gap", QuadExt(two_value_identity_gap(a, b))});
  cert.steps.push_back({"generic (1-a^2)(1-b^2)", QuadExt((1 - a * a) * (1 - b * b))});

  // subcase b = 0: both sides are affine in |C| with equal slope 3/(n(n+2))
  auto gap = [&](const Rational& size) -> Rational {
    return irr * (size / n - 2) - (3 * size / (Rational(n) * (n + 2)) - 2);
  };
  const Rational g1 = gap(Rational(n + 2)), g2 = gap(Rational(4L * n * n));
  if (g1 != g2) throw std::logic_error("scan_s45: b = 0 gap depends on |C|");
  const Rational ratio = make_rational(6, n + 2);
  if (g1 != 2 - ratio) throw std::logic_error("scan_s45: b = 0 gap differs from 2 - 6/(n+2)");
  cert.steps.push_back({"6/(n+2)", QuadExt(ratio)});
  cert.contradiction = ratio != 2;
  cert.conclusion = cert.contradiction ? "6/(n+2) != 2: no irrational 4-distance 6-design"
                                       : "6/(n+2) = 2: not excluded";
  return cert;
}

ScanCertificate scan_s5_at(int n) {
  ScanCertificate cert;
  cert.s = 5;
  cert.n = n;
  const Rational a = make_rational(-1, n + 1), b = make_rational(2, n + 3), c = make_rational(3, n + 4);
  cert.steps.push_back({"generic identity gap", QuadExt(three_value_identity_gap(a, b, c))});
  cert.steps.push_back({"generic (1-a^2)(1-b^2)(1-c^2)", QuadExt((1 - a * a) * (1 - b * b) * (1 - c * c))});

  const Rational t = Rational(n) * (n + 2) * (n + 4);
  const Rational size3 = 2 * Rational(n) * (n + 1) * (n + 2) * (n + 4) / (n + 6);
  const Rational size = size3 / 3;
  const Rational b2_first = (t - size3) / t;
  // at n = 4 the second expression has a vanishing denominator and b^2 = 0 already
  if (t != size3) {
    const Rational b2_second = (t * (n + 6) - 30 * size) / ((n + 6) * (t - size3));
    if (b2_first != b2_second) throw std::logic_error("scan_s45: b^2 expressions disagree at the derived |C|");
  }
  const Rational b2 = make_rational(4 - n, n + 6);
  if (b2 != b2_first) throw std::logic_error("scan_s45: b^2 differs from (4-n)/(n+6)");
  cert.steps.push_back({"3|C|", QuadExt(size3)});
  cert.steps.push_back({"b^2", QuadExt(b2)});

  if (n == 2) {
    cert.contradiction = false;
    cert.conclusion = "excluded n = 2 branch: |C| = " + to_literal(size) + ", b^2 = " + to_literal(b2) +
                      " (gives s >= 6)";
  } else if (sgn(b2) <= 0) {
    cert.contradiction = true;
    cert.conclusion = "b^2 = " + to_literal(b2) + " <= 0: contradiction";
  } else if (size.get_den() != 1) {
    cert.contradiction = true;
    cert.conclusion = "3|C| = " + to_literal(size3) + " gives non-integer |C|: contradiction";
  } else {
    cert.contradiction = false;
    cert.conclusion = "not excluded";
  }
  return cert;
}

}  // namespace

std::vector<ScanCertificate> scan_s45(int s, int n_min, int n_max) {
  if (s != 4 && s != 5) throw std::invalid_argument("scan_s45: s must be 4 or 5");
  const int floor = s == 5 ? 2 : 3;
  if (n_min < floor) throw std::invalid_argument("scan_s45: n must be at least " + std::to_string(floor));
  std::vector<ScanCertificate> out;
  for (int n = n_min; n <= n_max; ++n) out.push_back(s == 4 ? scan_s4_at(n) : scan_s5_at(n));
  return out;
}

}  // namespace scdt
