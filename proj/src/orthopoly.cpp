#include "scdt/orthopoly.hpp"

#include <stdexcept>

namespace scdt {

Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Integer harmonic_dimension(int n, int k) {
  if (k < 0) return Integer(0);
  return binomial(n + k - 1, k) - binomial(n + k - 3, k - 2);
}

std::vector<Polynomial> gegenbauer_family(int n, int kmax) {
  if (n < 2) throw std::invalid_argument("gegenbauer: dimension must be >= 2");
  std::vector<Polynomial> q;
  q.push_back(Polynomial::constant(QuadExt(1)));
  if (kmax >= 1) q.push_back(Polynomial::monomial(QuadExt(1), 1));
  const Polynomial u = Polynomial::monomial(QuadExt(1), 1);
  for (int k = 1; k < kmax; ++k) {
    Polynomial next = u * q[k] * QuadExt(make_rational(2 * k + n - 2, k + n - 2));
    next -= q[k - 1] * QuadExt(make_rational(k, k + n - 2));
    q.push_back(std::move(next));
  }
  for (auto& p : q) p.set_context_dim(n);
  q.resize(static_cast<std::size_t>(kmax) + 1);
  return q;
}

Polynomial gegenbauer(int n, int k) {
  if (k < 0) throw std::invalid_argument("gegenbauer: negative degree");
  return gegenbauer_family(n, k).back();
}

Polynomial jacobi_adjacent(int n, int i) {
  if (i < 0) throw std::invalid_argument("jacobi_adjacent: negative degree");
  const Rational alpha = make_rational(n - 1, 2);
  const Rational beta = make_rational(n - 3, 2);
  const Rational ab = alpha + beta;
  const Polynomial x = Polynomial::monomial(QuadExt(1), 1);
  const Polynomial one = Polynomial::constant(QuadExt(1));

  // unnormalized P_k^{(alpha, beta)}
  Polynomial prev = one;
  Polynomial cur = Polynomial({QuadExt(Rational(alpha + 1 - (ab + 2) / 2)), QuadExt(Rational((ab + 2) / 2))});
  if (i == 0) cur = one;
  for (int k = 1; k < i; ++k) {
    const Rational c = 2 * k + ab;
    const Rational lhs = 2 * (k + 1) * (k + ab + 1) * c;
    Polynomial next = x * cur * QuadExt(Rational((c + 1) * (c + 2) * c / lhs));
    next += cur * QuadExt(Rational((c + 1) * (alpha * alpha - beta * beta) / lhs));
    next -= prev * QuadExt(Rational(2 * (k + alpha) * (k + beta) * (c + 2) / lhs));
    prev = std::move(cur);
    cur = std::move(next);
  }
  QuadExt at_one = cur(QuadExt(1));
  cur *= QuadExt(1) / at_one;
  cur.set_context_dim(n);
  return cur;
}

Polynomial GegenbauerExpansion::to_polynomial() const {
  if (g.empty()) return Polynomial();
  auto basis = gegenbauer_family(dim, static_cast<int>(g.size()) - 1);
  Polynomial acc;
  for (std::size_t k = 0; k < g.size(); ++k) acc += basis[k] * g[k];
  acc.set_context_dim(dim);
  return acc;
}

GegenbauerExpansion gegenbauer_expand(const Polynomial& p, int n) {
  if (p.is_zero()) throw std::invalid_argument("gegenbauer_expand: zero polynomial");
  const int d = p.degree();
  auto basis = gegenbauer_family(n, d);
  GegenbauerExpansion out;
  out.dim = n;
  out.g.assign(static_cast<std::size_t>(d) + 1, QuadExt(0));
  Polynomial rest = p;
  for (int k = d; k >= 0; --k) {
    QuadExt c = rest.coeff(static_cast<std::size_t>(k)) / basis[k].leading();
    out.g[k] = c;
    if (!c.is_zero()) rest -= basis[k] * c;
  }
  return out;
}

}  // namespace scdt
