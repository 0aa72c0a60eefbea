#include "scdt/design.hpp"

#include <algorithm>

#include "scdt/orthopoly.hpp"
#include "scdt/parallel.hpp"

namespace scdt {

Rational moment_f(int n, int j) {
  if (j < 0) throw std::invalid_argument("moment_f: negative index");
  if (j % 2 == 1) return Rational(0);
  Rational f(1);
  for (int i = 1; i <= j / 2; ++i) f *= make_rational(2 * i - 1, n + 2 * i - 2);
  return f;
}

QuadExt kernel_sum(const SphericalCode& code, int k, SumPath path, unsigned workers) {
  const Polynomial q = gegenbauer(code.dim(), k);
  const std::size_t n = code.size();
  const auto& values = code.spectrum().values;
  if (path == SumPath::kDistribution) {
    std::vector<std::size_t> totals(values.size(), 0);
    for (const auto& row : distance_distribution(code).counts) {
      for (std::size_t i = 0; i < row.size(); ++i) totals[i] += row[i];
    }
    QuadExt acc(static_cast<long>(n));  // Q_k(1) = 1 on the diagonal
    for (std::size_t i = 0; i < values.size(); ++i) {
      acc += q(values[i]) * QuadExt(static_cast<long>(totals[i]));
    }
    return acc;
  }
  workers = std::max(1u, workers);
  std::vector<QuadExt> partial(workers, QuadExt(0));
  parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    QuadExt acc(0);
    for (std::size_t x = begin; x < end; ++x) {
      for (std::size_t y = 0; y < n; ++y) acc += q(code.gram(x, y));
    }
    partial[w] = acc;
  });
  QuadExt total(0);
  for (const auto& p : partial) total += p;
  return total;
}

StrengthReport design_strength(const SphericalCode& code, unsigned workers) {
  const int s = static_cast<int>(code.spectrum().s());
  const SumPath path = distance_distribution(code).uniform ? SumPath::kDistribution : SumPath::kPerPair;
  StrengthReport out;
  const int cap = 2 * s + 1;
  for (int k = 1; k <= cap; ++k) {
    QuadExt sk = kernel_sum(code, k, path, workers);
    out.sums.push_back(sk);
    if (!sk.is_zero()) {
      out.t = k - 1;
      out.first_nonzero = k;
      out.first_nonzero_value = sk;
      return out;
    }
  }
  out.t = cap;
  out.cap_anomaly = true;
  return out;
}

std::vector<QuadExt> check_syst1(const SphericalCode& code, int j) {
  const auto& values = code.spectrum().values;
  const auto dd = distance_distribution(code);
  std::vector<QuadExt> powers;
  for (const auto& a : values) powers.push_back(pow(a, static_cast<unsigned>(j)));
  const QuadExt target = QuadExt(moment_f(code.dim(), j) * static_cast<long>(code.size()) - 1);
  std::vector<QuadExt> out;
  out.reserve(code.size());
  for (const auto& row : dd.counts) {
    QuadExt acc(0);
    for (std::size_t i = 0; i < row.size(); ++i) acc += powers[i] * QuadExt(static_cast<long>(row[i]));
    out.push_back(acc - target);
  }
  return out;
}

Integer dgs_bound(int n, int t) {
  if (t < 0) throw std::invalid_argument("dgs_bound: negative strength");
  const int m = (t + 1) / 2;
  const int eps = 2 * m - t;
  return binomial(n + m - 1 - eps, n - 1) + binomial(n + m - 2, n - 1);
}

DesignProfile classify(const SphericalCode& code, unsigned workers) {
  DesignProfile p;
  p.n = code.dim();
  p.size = code.size();
  const auto& values = code.spectrum().values;
  p.s = values.size();
  p.strength = design_strength(code, workers);
  p.t = p.strength.t;
  const auto dd = distance_distribution(code);
  p.uniform = dd.uniform;

  const bool closed = std::all_of(values.begin(), values.end(), [&](const QuadExt& a) {
    return std::find(values.begin(), values.end(), -a) != values.end() || a == QuadExt(-1);
  });
  const bool has_minus_one = !values.empty() && values.back() == QuadExt(-1);
  p.symmetric_spectrum = has_minus_one && closed;
  bool paired = has_minus_one;
  if (paired) {
    for (const auto& row : dd.counts) {
      if (row.back() != 1) {
        paired = false;
        break;
      }
    }
  }
  p.antipodal = paired && closed;

  const int s = static_cast<int>(p.s);
  p.delsarte = p.t >= 2 * s - 2;
  p.dgs_bound = dgs_bound(p.n, p.t);
  p.tight = Integer(static_cast<unsigned long>(p.size)) == p.dgs_bound;
  p.strength_bound_ok = p.t <= 2 * s && (!p.symmetric_spectrum || p.t <= 2 * s - 1);
  return p;
}

}  // namespace scdt
