#include "scdt/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace scdt {

namespace {

int sign_at(const Polynomial& p, const Rational& x) { return p(QuadExt(x)).sign(); }

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

std::size_t variations(const std::vector<Polynomial>& seq, const Rational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

// Clears denominators: positive rational multiple with integer coprime
// coefficients.
Polynomial primitive_integer(const Polynomial& p) {
  Integer den(1);
  for (const auto& c : p.coeffs()) {
    const Rational& r = c.as_rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  }
  Integer g(0);
  std::vector<QuadExt> out;
  for (const auto& c : p.coeffs()) {
    Rational r = c.as_rational() * den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_num_mpz_t());
    out.emplace_back(r);
  }
  Polynomial q(std::move(out));
  if (g != 0 && g != 1) q *= QuadExt(Rational(1, 1) / Rational(g));
  if (q.leading().sign() < 0) q = -q;
  return q;
}

Rational cauchy_bound(const Polynomial& p) {
  Rational lead = abs(p.leading().as_rational());
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational c = abs(p.coeffs()[k].as_rational()) / lead;
    if (c > m) m = c;
  }
  return m + 1;
}

struct Isolator {
  const Polynomial& poly;
  std::vector<Polynomial> seq;
  std::vector<RealRoot> out;

  std::size_t count(const Rational& a, const Rational& b) const {
    return variations(seq, a) - variations(seq, b);
  }

  void run(const Rational& a, const Rational& b, std::size_t n) {
    if (n == 0) return;
    if (n == 1) {
      out.push_back(RealRoot{std::nullopt, a, b, poly});
      return;
    }
    Rational m = (a + b) / 2;
    if (sign_at(poly, m) != 0) {
      std::size_t left = count(a, m);
      run(a, m, left);
      run(m, b, n - left);
      return;
    }
    // m is a rational root; bracket it away from its neighbours.
    Rational delta = (b - a) / 4;
    while (true) {
      Rational lo = m - delta;
      Rational hi = m + delta;
      if (sign_at(poly, lo) != 0 && sign_at(poly, hi) != 0 && count(lo, hi) == 1) {
        std::size_t left = count(a, lo);
        run(a, lo, left);
        out.push_back(RealRoot{QuadExt(m), lo, hi, poly});
        run(hi, b, n - left - 1);
        return;
      }
      delta /= 2;
    }
  }
};

Rational interval_product_lo(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
  Rational v[4] = {a0 * b0, a0 * b1, a1 * b0, a1 * b1};
  return *std::min_element(v, v + 4);
}
Rational interval_product_hi(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
  Rational v[4] = {a0 * b0, a0 * b1, a1 * b0, a1 * b1};
  return *std::max_element(v, v + 4);
}

bool in_closed(const QuadExt& x, const Rational& lo, const Rational& hi) {
  return compare(x, QuadExt(lo)) >= 0 && compare(x, QuadExt(hi)) <= 0;
}

std::vector<Integer> integers_in(const Rational& lo, const Rational& hi) {
  std::vector<Integer> v;
  Integer k;
  mpz_cdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  for (; Rational(k) <= hi; ++k) v.push_back(k);
  return v;
}

// Identifies rational roots and pairs of roots forming a rational quadratic
// factor of the primitive integer polynomial `r`.
void identify_exact(const Polynomial& r, std::vector<RealRoot>& roots) {
  const Rational lead(abs(r.leading().as_rational()));
  for (auto& root : roots) {
    if (root.is_exact()) continue;
    root.refine(Rational(1, 2) / lead);
    for (const Integer& k : integers_in(root.lo * lead, root.hi * lead)) {
      Rational cand(k, 1);
      cand /= lead;
      if (sign_at(r, cand) == 0) {
        root.exact = QuadExt(cand);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].is_exact()) continue;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[j].is_exact()) continue;
      RealRoot& a = roots[i];
      RealRoot& b = roots[j];
      Rational target = Rational(1, 4) / lead;
      Rational slo, shi, plo, phi;
      while (true) {
        slo = a.lo + b.lo;
        shi = a.hi + b.hi;
        plo = interval_product_lo(a.lo, a.hi, b.lo, b.hi);
        phi = interval_product_hi(a.lo, a.hi, b.lo, b.hi);
        if (shi - slo < target && phi - plo < target) break;
        a.refine((a.hi - a.lo) / 2);
        b.refine((b.hi - b.lo) / 2);
        if (a.is_exact() || b.is_exact()) break;
      }
      if (a.is_exact() || b.is_exact()) continue;
      bool found = false;
      for (const Integer& ks : integers_in(slo * lead, shi * lead)) {
        for (const Integer& kp : integers_in(plo * lead, phi * lead)) {
          Rational sum(ks, 1);
          sum /= lead;
          Rational prod(kp, 1);
          prod /= lead;
          Rational disc = sum * sum - 4 * prod;
          if (sgn(disc) <= 0) continue;
          Polynomial quad({QuadExt(prod), QuadExt(Rational(-sum)), QuadExt(1)});
          if (!divmod(r, quad).second.is_zero()) continue;
          QuadExt half_root = QuadExt::sqrt_of(disc) * QuadExt(Rational(1, 2));
          QuadExt big = QuadExt(Rational(sum / 2)) + half_root;
          QuadExt small = QuadExt(Rational(sum / 2)) - half_root;
          if (in_closed(small, a.lo, a.hi) && in_closed(big, b.lo, b.hi)) {
            a.exact = small;
            b.exact = big;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
}

}  // namespace

void RealRoot::refine(const Rational& width) {
  if (is_exact()) return;
  int slo = sign_at(witness, lo);
  while (hi - lo >= width) {
    Rational m = (lo + hi) / 2;
    int sm = sign_at(witness, m);
    if (sm == 0) {
      exact = QuadExt(m);
      Rational quarter = (hi - lo) / 4;
      // keep an isolating bracket around the rational root
      lo = m - quarter;
      hi = m + quarter;
      return;
    }
    if (sm == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
}

int RealRoot::compare_to(const Rational& x) {
  if (is_exact()) return compare(*exact, QuadExt(x));
  // interval roots lie strictly inside (lo, hi)
  while (lo < x && x < hi) {
    refine((hi - lo) / 2);
    if (is_exact()) return compare(*exact, QuadExt(x));
  }
  return x <= lo ? 1 : -1;
}

std::size_t sturm_count(const Polynomial& p, const Rational& a, const Rational& b) {
  auto seq = sturm_sequence(squarefree_part(p));
  return variations(seq, a) - variations(seq, b);
}

std::vector<RealRoot> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  if (p.degree() == 0) return {};

  const bool rational = p.is_rational();
  Polynomial field_part = squarefree_part(p);
  Polynomial r = rational ? field_part : squarefree_part(p * p.conj());
  r = primitive_integer(r);

  Isolator iso{r, sturm_sequence(r), {}};
  Rational bound = cauchy_bound(r);
  iso.run(-bound, bound, iso.count(-bound, bound));
  std::vector<RealRoot> roots = std::move(iso.out);
  identify_exact(r, roots);

  if (!rational) {
    std::vector<RealRoot> mine;
    for (auto& root : roots) {
      bool keep = false;
      bool decided = false;
      if (root.is_exact()) {
        try {
          keep = p(*root.exact).is_zero();
          decided = true;
        } catch (const FieldError&) {
        }
      }
      if (!decided) {
        // field_part is squarefree and its roots are among r's, so it
        // changes sign across the bracket iff the root is its own.
        keep = field_part(QuadExt(root.lo)).sign() * field_part(QuadExt(root.hi)).sign() < 0;
      }
      if (keep) mine.push_back(std::move(root));
    }
    roots = std::move(mine);
  }
  return roots;
}

std::vector<RealRoot> isolate_roots(const Polynomial& p) {
  std::vector<RealRoot> out;
  for (auto& root : isolate_real_roots(p)) {
    if (root.compare_to(Rational(-1)) >= 0 && root.compare_to(Rational(1)) < 0) out.push_back(std::move(root));
  }
  return out;
}

}  // namespace scdt
