#include "scdt/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "scdt/design.hpp"
#include "scdt/orthopoly.hpp"
#include "scdt/parallel.hpp"
#include "scdt/roots.hpp"

namespace scdt {

std::string ConstancyFailure::describe() const {
  return "not an association scheme: pair (" + std::to_string(x) + ", " + std::to_string(y) + ") in relation " +
         std::to_string(k) + " has p_" + std::to_string(i) + "," + std::to_string(j) + " = " + std::to_string(found) +
         ", expected " + std::to_string(expected);
}

std::vector<QuadExt> SchemeTables::idempotent(std::size_t k) const {
  std::vector<QuadExt> v(rank());
  for (std::size_t l = 0; l < rank(); ++l) v[l] = evalues(k, l);
  return v;
}

std::vector<QuadExt> SchemeTables::product(const std::vector<QuadExt>& x, const std::vector<QuadExt>& y) const {
  const std::size_t r = rank();
  std::vector<QuadExt> out(r, QuadExt(0));
  for (std::size_t l = 0; l < r; ++l) {
    if (x[l].is_zero()) continue;
    for (std::size_t m = 0; m < r; ++m) {
      if (y[m].is_zero()) continue;
      const QuadExt xy = x[l] * y[m];
      for (std::size_t k = 0; k < r; ++k) {
        std::size_t c = p_at(l, m, k);
        if (c != 0) out[k] += xy * QuadExt(static_cast<long>(c));
      }
    }
  }
  return out;
}

namespace {

// Counts p_ij^k at every pair and checks it against the first pair of each
// relation. Returns the lowest (x, y) violation in row-major order.
std::variant<std::vector<std::size_t>, ConstancyFailure> intersection_numbers(const SphericalCode& code,
                                                                              unsigned workers) {
  const std::size_t n = code.size();
  const std::size_t r = code.spectrum().s() + 1;
  const auto& rel = code.relation_matrix();

  auto count_pair = [&](std::size_t x, std::size_t y, std::vector<std::size_t>& c) {
    std::fill(c.begin(), c.end(), 0);
    const std::uint8_t* rx = rel.data() + x * n;
    const std::uint8_t* ry = rel.data() + y * n;
    for (std::size_t z = 0; z < n; ++z) ++c[rx[z] * r + ry[z]];
  };

  std::vector<std::vector<std::size_t>> reference(r);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t k = rel[x * n + y];
      if (reference[k].empty()) {
        reference[k].resize(r * r);
        count_pair(x, y, reference[k]);
      }
    }
  }

  workers = std::max(1u, workers);
  std::vector<std::optional<ConstancyFailure>> failures(workers);
  parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    std::vector<std::size_t> c(r * r);
    for (std::size_t x = begin; x < end; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t k = rel[x * n + y];
        count_pair(x, y, c);
        if (c == reference[k]) continue;
        for (std::size_t idx = 0; idx < r * r; ++idx) {
          if (c[idx] != reference[k][idx]) {
            failures[w] = ConstancyFailure{x, y, k, idx / r, idx % r, reference[k][idx], c[idx]};
            return;
          }
        }
      }
    }
  });
  for (auto& f : failures) {
    if (f) return *f;
  }

  std::vector<std::size_t> p(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) p[(i * r + j) * r + k] = reference[k][i * r + j];
    }
  }
  return p;
}

Matrix gegenbauer_evalues(const SchemeTables& t) {
  const std::size_t r = t.rank();
  const std::size_t s = t.classes;
  Matrix e(r, r);
  auto q = gegenbauer_family(t.dim, static_cast<int>(s));
  const QuadExt size(static_cast<long>(t.points));
  for (std::size_t k = 0; k < s; ++k) {
    const QuadExt scale = QuadExt(Rational(harmonic_dimension(t.dim, static_cast<int>(k)))) / size;
    for (std::size_t l = 0; l < r; ++l) e(k, l) = scale * q[k](t.relation_values[l]);
  }
  for (std::size_t l = 0; l < r; ++l) {
    QuadExt v(l == 0 ? 1 : 0);
    for (std::size_t k = 0; k < s; ++k) v -= e(k, l);
    e(s, l) = v;
  }
  return e;
}

// Primitive idempotents from a generic element M = sum_l c_l A_l with
// distinct eigenvalues: E_k = prod_{j != k} (M - theta_j) / (theta_k - theta_j).
Matrix spectral_evalues(const SchemeTables& t) {
  const std::size_t r = t.rank();
  std::mt19937 rng(20240917u);
  std::uniform_int_distribution<int> coeff(-9, 9);

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<QuadExt> c(r);
    for (std::size_t l = 0; l < r; ++l) c[l] = QuadExt(static_cast<long>(coeff(rng)));
    Matrix b(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t m = 0; m < r; ++m) {
        QuadExt v(0);
        for (std::size_t l = 0; l < r; ++l) v += c[l] * QuadExt(static_cast<long>(t.p_at(l, m, k)));
        b(k, m) = v;
      }
    }
    Polynomial chi = characteristic_polynomial(b);
    if (gcd(chi, chi.derivative()).degree() > 0) continue;

    auto roots = isolate_real_roots(chi);
    if (roots.size() != r) throw FieldError("intersection algebra has nonreal eigenvalues");
    std::vector<QuadExt> theta;
    for (auto& root : roots) {
      if (!root.is_exact()) throw FieldError("splitting field has degree above 2");
      theta.push_back(*root.exact);
    }
    shared_radicand(theta);

    std::vector<std::vector<QuadExt>> idems;
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<QuadExt> x(r, QuadExt(0));
      x[0] = QuadExt(1);
      for (std::size_t j = 0; j < r; ++j) {
        if (j == k) continue;
        std::vector<QuadExt> mx = t.product(c, x);
        const QuadExt denom = theta[k] - theta[j];
        for (std::size_t l = 0; l < r; ++l) x[l] = (mx[l] - theta[j] * x[l]) / denom;
      }
      idems.push_back(std::move(x));
    }

    // E_0 first, then idempotents recognised as h_d Q_d(a_l)/|C| by degree d,
    // then the rest by multiplicity and values.
    auto q = gegenbauer_family(t.dim, static_cast<int>(2 * t.classes + 1));
    const QuadExt size(static_cast<long>(t.points));
    auto degree_of = [&](const std::vector<QuadExt>& e) -> std::size_t {
      for (std::size_t d = 0; d < q.size(); ++d) {
        const QuadExt scale = QuadExt(Rational(harmonic_dimension(t.dim, static_cast<int>(d)))) / size;
        bool match = true;
        for (std::size_t l = 0; l < r && match; ++l) match = e[l] == scale * q[d](t.relation_values[l]);
        if (match) return d;
      }
      return q.size();
    };
    std::vector<std::size_t> deg(r);
    for (std::size_t k = 0; k < r; ++k) deg[k] = degree_of(idems[k]);
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (deg[a] != deg[b]) return deg[a] < deg[b];
      int cm = compare(idems[a][0], idems[b][0]);
      if (cm != 0) return cm < 0;
      for (std::size_t l = 1; l < r; ++l) {
        cm = compare(idems[a][l], idems[b][l]);
        if (cm != 0) return cm > 0;
      }
      return a < b;
    });
    Matrix e(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t l = 0; l < r; ++l) e(k, l) = idems[order[k]][l];
    }
    return e;
  }
  throw FieldError("no separating element found for the intersection algebra");
}

}  // namespace

std::variant<SchemeTables, ConstancyFailure> try_build_scheme(const SphericalCode& code, const SchemeOptions& options) {
  auto counted = intersection_numbers(code, options.workers);
  if (auto* f = std::get_if<ConstancyFailure>(&counted)) return *f;

  SchemeTables t;
  t.classes = code.spectrum().s();
  t.points = code.size();
  t.dim = code.dim();
  t.relation_values.push_back(QuadExt(1));
  for (const auto& a : code.spectrum().values) t.relation_values.push_back(a);
  t.relation_of = code.relation_matrix();
  t.p = std::move(std::get<std::vector<std::size_t>>(counted));

  IdempotentSource source;
  if (options.source) {
    source = *options.source;
  } else {
    const int s = static_cast<int>(t.classes);
    source = design_strength(code, options.workers).t >= 2 * s - 2 ? IdempotentSource::kGegenbauer
                                                                    : IdempotentSource::kSpectral;
  }
  t.source = source;
  t.evalues = source == IdempotentSource::kGegenbauer ? gegenbauer_evalues(t) : spectral_evalues(t);
  for (std::size_t k = 0; k < t.rank(); ++k) t.mult.push_back(t.evalues(k, 0) * QuadExt(static_cast<long>(t.points)));
  t.krein = krein_parameters(t);
  return t;
}

SchemeTables build_scheme(const SphericalCode& code, const SchemeOptions& options) {
  auto result = try_build_scheme(code, options);
  if (auto* f = std::get_if<ConstancyFailure>(&result)) throw SchemeError(*f);
  return std::get<SchemeTables>(std::move(result));
}

std::vector<QuadExt> krein_parameters(const SchemeTables& t) {
  const std::size_t r = t.rank();
  // columns of the change of basis: idempotent k evaluated on relation l
  Matrix basis(r, r);
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t k = 0; k < r; ++k) basis(l, k) = t.evalues(k, l);
  }
  std::vector<QuadExt> q(r * r * r);
  const QuadExt size(static_cast<long>(t.points));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      std::vector<QuadExt> rhs(r);
      for (std::size_t l = 0; l < r; ++l) rhs[l] = size * t.evalues(i, l) * t.evalues(j, l);
      auto sol = solve(basis, rhs);
      for (std::size_t k = 0; k < r; ++k) {
        q[(i * r + j) * r + k] = sol[k];
        q[(j * r + i) * r + k] = sol[k];
      }
    }
  }
  return q;
}

SchemeChecks verify_tables(const SchemeTables& t) {
  const std::size_t r = t.rank();
  SchemeChecks c;

  c.resolution = true;
  for (std::size_t l = 0; l < r; ++l) {
    QuadExt sum(0);
    for (std::size_t k = 0; k < r; ++k) sum += t.evalues(k, l);
    if (sum != QuadExt(l == 0 ? 1 : 0)) c.resolution = false;
  }

  c.idempotency = true;
  for (std::size_t i = 0; i < r && c.idempotency; ++i) {
    auto ei = t.idempotent(i);
    for (std::size_t j = i; j < r; ++j) {
      auto prod = t.product(ei, t.idempotent(j));
      auto expected = i == j ? ei : std::vector<QuadExt>(r, QuadExt(0));
      if (prod != expected) {
        c.idempotency = false;
        break;
      }
    }
  }

  c.multiplicities = true;
  QuadExt total(0);
  for (const auto& m : t.mult) {
    if (!m.is_rational() || m.as_rational().get_den() != 1 || m.sign() <= 0) c.multiplicities = false;
    total += m;
  }
  if (total != QuadExt(static_cast<long>(t.points))) c.multiplicities = false;

  c.krein_identity = true;
  c.krein_nonnegative = true;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        const QuadExt& q = t.q_at(i, j, k);
        if (q.sign() < 0) c.krein_nonnegative = false;
        if (i == 0 && q != QuadExt(j == k ? 1 : 0)) c.krein_identity = false;
      }
    }
  }

  c.harmonic_ranks = true;
  for (std::size_t k = 0; k + 1 < r; ++k) {
    if (t.mult[k] != QuadExt(Rational(harmonic_dimension(t.dim, static_cast<int>(k))))) c.harmonic_ranks = false;
  }

  c.rational_middle = true;
  for (std::size_t k = 2; k + 1 < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) {
      if (!t.evalues(k, l).is_rational()) c.rational_middle = false;
    }
  }
  return c;
}

bool dense_cross_check(const SphericalCode& code, const SchemeTables& t) {
  const std::size_t n = code.size();
  const std::size_t r = t.rank();
  std::vector<Matrix> dense;
  for (std::size_t k = 0; k < r; ++k) {
    Matrix e(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) e(x, y) = t.evalues(k, code.relation(x, y));
    }
    dense.push_back(std::move(e));
  }
  const QuadExt inv_size = QuadExt(1) / QuadExt(static_cast<long>(n));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Matrix prod = dense[i] * dense[j];
      if (!(prod == (i == j ? dense[i] : Matrix(n, n)))) return false;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          QuadExt rhs(0);
          for (std::size_t k = 0; k < r; ++k) rhs += t.q_at(i, j, k) * dense[k](x, y);
          if (dense[i](x, y) * dense[j](x, y) != rhs * inv_size) return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Q-polynomial orderings

const char* to_string(SuzukiClass c) {
  switch (c) {
    case SuzukiClass::kNone: return "none";
    case SuzukiClass::kI: return "I";
    case SuzukiClass::kII: return "II";
    case SuzukiClass::kIII: return "III";
    case SuzukiClass::kIV: return "IV";
    case SuzukiClass::kV: return "V";
  }
  return "none";
}

bool is_qpolynomial(const SchemeTables& t, const std::vector<std::size_t>& order) {
  const std::size_t r = t.rank();
  if (r < 2 || order.size() != r || order[0] != 0) return false;
  const std::size_t f1 = order[1];
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      const bool nonzero = !t.q_at(f1, order[j], order[k]).is_zero();
      const std::size_t gap = j > k ? j - k : k - j;
      if (gap > 1 && nonzero) return false;
      if (k == j + 1 && !nonzero) return false;
    }
  }
  return true;
}

namespace {

using Rule = long (*)(long j, long d);

// Matches x_1..x_d against a sequence given from the front by `front` and
// from the back by `back` (position d+1-j holds back(j)); the two rules may
// meet at any split point.
bool matches_pattern(const std::vector<std::size_t>& order, Rule front, Rule back) {
  const long d = static_cast<long>(order.size()) - 1;
  auto x = [&](long j) { return static_cast<long>(order[static_cast<std::size_t>(j)]); };
  for (long split = 0; split <= d; ++split) {
    bool ok = true;
    for (long j = 1; j <= split && ok; ++j) {
      long v = front(j, d);
      ok = v >= 1 && v <= d && x(j) == v;
    }
    if (!ok) continue;
    if (back == nullptr) {
      if (split == d) return true;
      continue;
    }
    for (long j = 1; j <= d - split && ok; ++j) {
      long v = back(j, d);
      ok = v >= 1 && v <= d && x(d + 1 - j) == v;
    }
    if (ok) return true;
  }
  return false;
}

long front_i(long j, long) { return 2 * j; }
long back_i(long j, long) { return 2 * j - 1; }
long front_ii(long j, long d) { return j % 2 == 1 ? d - (j - 1) / 2 : j / 2; }
long front_iii(long j, long d) { return j % 2 == 1 ? d - (j - 1) : j; }
long back_iii(long j, long d) { return j % 2 == 1 ? j : d - (j - 1); }
long front_iv(long j, long d) { return j % 2 == 1 ? d - j : j; }
long back_iv(long j, long d) { return j % 2 == 1 ? d - (j - 1) : j - 1; }

}  // namespace

std::vector<SuzukiClass> suzuki_matches(const std::vector<std::size_t>& order) {
  std::vector<SuzukiClass> out;
  if (order.empty() || order[0] != 0) return out;
  if (matches_pattern(order, front_i, back_i)) out.push_back(SuzukiClass::kI);
  if (matches_pattern(order, front_ii, nullptr)) out.push_back(SuzukiClass::kII);
  if (matches_pattern(order, front_iii, back_iii)) out.push_back(SuzukiClass::kIII);
  if (matches_pattern(order, front_iv, back_iv)) out.push_back(SuzukiClass::kIV);
  if (order == std::vector<std::size_t>{0, 5, 3, 2, 4, 1}) out.push_back(SuzukiClass::kV);
  return out;
}

namespace {

// Orderings forced by tridiagonality: F_{j+1} is the unique index outside
// {F_{j-1}, F_j} with q_{F_1 F_j}^k != 0.
std::vector<std::vector<std::size_t>> greedy_orderings(const SchemeTables& t) {
  const std::size_t r = t.rank();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t f1 = 1; f1 < r; ++f1) {
    std::vector<std::size_t> order{0, f1};
    std::vector<bool> used(r, false);
    used[0] = used[f1] = true;
    bool ok = true;
    while (ok && order.size() < r) {
      const std::size_t cur = order.back();
      std::optional<std::size_t> next;
      for (std::size_t k = 0; k < r; ++k) {
        if (used[k] || t.q_at(f1, cur, k).is_zero()) continue;
        if (next) {
          ok = false;
          break;
        }
        next = k;
      }
      if (!next) ok = false;
      if (ok) {
        used[*next] = true;
        order.push_back(*next);
      }
    }
    if (ok && is_qpolynomial(t, order)) out.push_back(order);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

OrderingReport qpoly_orderings(const SchemeTables& t) {
  const std::size_t r = t.rank();
  std::vector<std::vector<std::size_t>> found;
  if (t.classes <= 8) {
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (is_qpolynomial(t, perm)) found.push_back(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  } else {
    found = greedy_orderings(t);
  }

  std::vector<std::size_t> natural(r);
  std::iota(natural.begin(), natural.end(), 0);
  OrderingReport rep;
  rep.total_qpoly = found.size();
  rep.within_suzuki_bound = found.size() <= 2;
  for (auto& order : found) {
    if (order == natural) {
      rep.natural_ordering_qpoly = true;
      continue;
    }
    AlternateOrdering alt;
    alt.matches = suzuki_matches(order);
    alt.ambiguous = alt.matches.size() > 1;
    alt.suzuki_class = alt.matches.size() == 1 ? alt.matches.front() : SuzukiClass::kNone;
    alt.order = std::move(order);
    rep.alternates.push_back(std::move(alt));
  }
  return rep;
}

GaloisAction galois_action(const SchemeTables& t) {
  const std::size_t r = t.rank();
  GaloisAction g;
  g.radicand = shared_radicand(t.evalues.data());
  g.permutation.resize(r);
  std::iota(g.permutation.begin(), g.permutation.end(), 0);
  if (g.radicand == 0) return g;

  std::vector<bool> hit(r, false);
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<QuadExt> conj(r);
    for (std::size_t l = 0; l < r; ++l) conj[l] = t.evalues(k, l).conj();
    std::optional<std::size_t> image;
    for (std::size_t m = 0; m < r; ++m) {
      if (t.idempotent(m) == conj) {
        image = m;
        break;
      }
    }
    if (!image || hit[*image]) {
      g.anomaly = true;
      g.identity = false;
      return g;
    }
    hit[*image] = true;
    g.permutation[k] = *image;
    if (*image != k) g.identity = false;
  }
  return g;
}

}  // namespace scdt
