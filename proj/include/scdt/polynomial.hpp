#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scdt/quad_ext.hpp"

namespace scdt {

/// Univariate polynomial with QuadExt coefficients, ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<QuadExt> coeffs, std::optional<int> context_dim = {});
  static Polynomial constant(const QuadExt& c);
  static Polynomial monomial(const QuadExt& c, std::size_t degree);
  /// u - root
  static Polynomial linear_factor(const QuadExt& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<QuadExt>& coeffs() const { return coeffs_; }
  QuadExt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : QuadExt(0); }
  const QuadExt& leading() const;
  std::optional<int> context_dim() const { return context_dim_; }
  void set_context_dim(std::optional<int> n) { context_dim_ = n; }

  QuadExt operator()(const QuadExt& u) const;
  bool is_rational() const;
  Polynomial conj() const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);
  Polynomial& operator*=(const QuadExt& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const QuadExt& c) { return a *= c; }
  friend Polynomial operator*(const QuadExt& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Coefficient equality (context_dim is metadata and not compared).
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();
  std::vector<QuadExt> coeffs_;
  std::optional<int> context_dim_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// Human-readable form in u, e.g. "7/8*u^2 + 1/4*u - 1/8".
std::string to_string(const Polynomial& p);

}  // namespace scdt
