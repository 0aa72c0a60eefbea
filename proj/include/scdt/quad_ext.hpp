#pragma once

// Exact arithmetic in Q and real quadratic fields Q(sqrt(d)).
//
// A QuadExt holds p + q*sqrt(d) in canonical form: q == 0 forces d == 0,
// otherwise d is squarefree and >= 2. Two values are equal iff their
// canonical fields are equal. Binary operations require both operands to be
// rational or to share one radicand; mixing Q(sqrt(2)) with Q(sqrt(3)) is an
// error rather than a silent extension to a biquadratic field.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace scdt {

using Rational = mpq_class;
using Integer = mpz_class;

/// Error raised by field operations (nonreal radicand, incompatible
/// radicands, division by zero).
class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Literal that failed to parse; `position` is a 0-based offset into the
/// literal text.
class LiteralError : public std::invalid_argument {
 public:
  LiteralError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

std::string to_literal(const Rational& r);
Rational parse_rational(std::string_view text);

/// Largest k with k*k dividing d, and the squarefree cofactor m, d = k^2 m.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t d);

class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& r) : rat_(r) {}  // NOLINT(google-explicit-constructor)

  /// Canonical element equal to p + q*sqrt(d). Throws FieldError for d < 0.
  static QuadExt normalize(const Rational& p, const Rational& q,
                           std::int64_t d);
  static QuadExt sqrt_of(const Rational& b);  // sqrt(b) for b >= 0

  const Rational& rational_part() const { return rat_; }
  const Rational& coef() const { return coef_; }
  std::int64_t radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 0; }
  bool is_zero() const { return radicand_ == 0 && sgn(rat_) == 0; }

  QuadExt conj() const;
  /// Field norm p^2 - q^2 d (rational).
  Rational norm() const;
  /// Exact sign in {-1, 0, 1}.
  int sign() const;
  QuadExt abs() const { return sign() < 0 ? -*this : *this; }
  /// The rational value; throws FieldError if irrational.
  const Rational& as_rational() const;
  double to_double() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& b);
  QuadExt& operator-=(const QuadExt& b);
  QuadExt& operator*=(const QuadExt& b);
  QuadExt& operator/=(const QuadExt& b);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.radicand_ == b.radicand_ && a.rat_ == b.rat_ && a.coef_ == b.coef_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
  friend bool operator<(const QuadExt& a, const QuadExt& b) { return compare(a, b) < 0; }
  friend bool operator>(const QuadExt& a, const QuadExt& b) { return compare(a, b) > 0; }
  friend bool operator<=(const QuadExt& a, const QuadExt& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const QuadExt& a, const QuadExt& b) { return compare(a, b) >= 0; }

  /// Total order consistent with the real values.
  friend int compare(const QuadExt& a, const QuadExt& b);

 private:
  QuadExt(Rational p, Rational q, std::int64_t d)
      : rat_(std::move(p)), coef_(std::move(q)), radicand_(d) {}
  void canonicalize();
  static std::int64_t common_radicand(const QuadExt& a, const QuadExt& b);

  Rational rat_{0};
  Rational coef_{0};
  std::int64_t radicand_ = 0;
};

QuadExt pow(const QuadExt& x, unsigned e);

/// Literal grammar: INT, INT/INT, R+R*sqrt(D), R-R*sqrt(D), R*sqrt(D),
/// sqrt(D), with optional signs; whitespace-insensitive.
QuadExt parse_quad(std::string_view text);
std::string to_literal(const QuadExt& x);

/// Radicand shared by all values (0 if all rational). Throws FieldError if
/// two distinct radicands occur.
std::int64_t shared_radicand(const std::vector<QuadExt>& values);

struct BesicovitchTerm {
  Rational coefficient;
  std::int64_t radicand;  // positive, not necessarily squarefree
};

struct BesicovitchResult {
  /// True iff no group of equal squarefree radicands sums to zero.
  bool independent = true;
  /// Zero-sum groups: squarefree radicand and the 1-based term indices.
  std::vector<std::pair<std::int64_t, std::vector<std::size_t>>> cancelling_groups;
  /// Forced pairings (i, j), i < j, 1-based, with equal radicands and
  /// opposite coefficients.
  std::vector<std::pair<std::size_t, std::size_t>> pairings;
};

/// Groups sum b_i sqrt(n_i) by squarefree radicand. A vanishing sum of
/// square roots forces every group sum to vanish.
BesicovitchResult besicovitch_pairing(const std::vector<BesicovitchTerm>& terms);

}  // namespace scdt
