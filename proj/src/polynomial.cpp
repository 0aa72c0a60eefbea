#include "scdt/polynomial.hpp"

#include <algorithm>

namespace scdt {

Polynomial::Polynomial(std::vector<QuadExt> coeffs, std::optional<int> context_dim)
    : coeffs_(std::move(coeffs)), context_dim_(context_dim) {
  trim();
}

Polynomial Polynomial::constant(const QuadExt& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const QuadExt& c, std::size_t degree) {
  std::vector<QuadExt> v(degree + 1, QuadExt(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const QuadExt& root) { return Polynomial({-root, QuadExt(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const QuadExt& Polynomial::leading() const {
  if (coeffs_.empty()) throw FieldError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

QuadExt Polynomial::operator()(const QuadExt& u) const {
  QuadExt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= u;
    acc += *it;
  }
  return acc;
}

bool Polynomial::is_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QuadExt& c) { return c.is_rational(); });
}

Polynomial Polynomial::conj() const {
  std::vector<QuadExt> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.conj());
  return Polynomial(std::move(v), context_dim_);
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<QuadExt> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * QuadExt(static_cast<long>(k));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  QuadExt inv = QuadExt(1) / leading();
  return p *= inv;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), QuadExt(0));
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), QuadExt(0));
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& b) {
  if (is_zero() || b.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<QuadExt> v(coeffs_.size() + b.coeffs_.size() - 1, QuadExt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * b.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const QuadExt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw FieldError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<QuadExt> rem = a.coeffs();
  std::vector<QuadExt> quot(rem.size() - b.coeffs().size() + 1, QuadExt(0));
  const QuadExt inv = QuadExt(1) / b.leading();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    QuadExt c = rem[k + db] * inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const QuadExt& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string lit = to_literal(c);
    bool compound = !c.is_rational() && sgn(c.rational_part()) != 0;
    if (compound) lit = "(" + lit + ")";
    if (!out.empty()) {
      if (!compound && lit[0] == '-') {
        out += " - ";
        lit.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (k >= 1 && (lit == "1" || lit == "-1")) {
      lit.pop_back();  // bare u or -u
      out += lit + "u";
    } else {
      out += lit;
      if (k >= 1) out += "*u";
    }
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace scdt
