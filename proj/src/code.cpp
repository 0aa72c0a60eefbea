#include "scdt/code.hpp"

#include <algorithm>

namespace scdt {

namespace {

std::string at(std::size_t x, std::size_t y) {
  return " at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

}  // namespace

SphericalCode SphericalCode::from_gram(int dim, Matrix gram, std::string label) {
  SphericalCode c;
  c.dim_ = dim;
  c.gram_ = std::move(gram);
  c.label_ = std::move(label);
  c.validate_and_index();
  return c;
}

SphericalCode SphericalCode::from_coords(int dim, std::vector<std::vector<QuadExt>> points, const QuadExt& norm2,
                                         std::string label) {
  if (norm2.sign() <= 0) throw CodeError(CodeErrorKind::kNorm, "norm2 must be positive");
  const std::size_t n = points.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (points[x].size() != static_cast<std::size_t>(dim)) {
      throw CodeError(CodeErrorKind::kShape, "point " + std::to_string(x) + " has " +
                                                 std::to_string(points[x].size()) + " coordinates, expected " +
                                                 std::to_string(dim));
    }
  }
  const QuadExt inv = QuadExt(1) / norm2;
  Matrix gram(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      QuadExt dot(0);
      for (int k = 0; k < dim; ++k) dot += points[x][k] * points[y][k];
      if (x == y && dot != norm2) {
        throw CodeError(CodeErrorKind::kNorm, "point " + std::to_string(x) + " has squared norm " + to_literal(dot) +
                                                  ", expected " + to_literal(norm2));
      }
      dot *= inv;
      gram(x, y) = dot;
      gram(y, x) = dot;
    }
  }
  SphericalCode c;
  c.dim_ = dim;
  c.gram_ = std::move(gram);
  c.label_ = std::move(label);
  c.coords_ = Coordinates{norm2, std::move(points)};
  c.validate_and_index();
  return c;
}

void SphericalCode::validate_and_index() {
  const std::size_t n = gram_.rows();
  if (dim_ < 2) throw CodeError(CodeErrorKind::kShape, "dimension must be at least 2");
  if (n < 2) throw CodeError(CodeErrorKind::kShape, "code must have at least 2 points");
  if (gram_.cols() != n) throw CodeError(CodeErrorKind::kShape, "gram matrix must be square");

  const QuadExt one(1);
  const QuadExt minus_one(-1);
  for (std::size_t x = 0; x < n; ++x) {
    if (gram_(x, x) != one) throw CodeError(CodeErrorKind::kDiagonal, "diagonal must be 1" + at(x, x));
  }
  try {
    radicand_ = shared_radicand(gram_.data());
  } catch (const FieldError&) {
    throw CodeError(CodeErrorKind::kRadicand, "gram entries mix incompatible radicands");
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const QuadExt& v = gram_(x, y);
      if (v != gram_(y, x)) throw CodeError(CodeErrorKind::kSymmetry, "gram not symmetric" + at(x, y));
      if (v == one) throw CodeError(CodeErrorKind::kDuplicate, "duplicate points" + at(x, y));
      if (v > one || v < minus_one) throw CodeError(CodeErrorKind::kRange, "entry outside [-1, 1)" + at(x, y));
    }
  }

  PsdCheck psd = psd_rank(gram_, static_cast<std::size_t>(dim_));
  if (psd.rank_exceeded) throw CodeError(CodeErrorKind::kRank, "rank exceeds dimension " + std::to_string(dim_));
  if (!psd.psd) throw CodeError(CodeErrorKind::kNotPsd, "gram not positive semidefinite");
  rank_ = psd.rank;

  std::vector<QuadExt> distinct;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const QuadExt& v = gram_(x, y);
      if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
    }
  }
  std::sort(distinct.begin(), distinct.end(), [](const QuadExt& a, const QuadExt& b) { return a > b; });
  if (distinct.size() > 254) throw CodeError(CodeErrorKind::kShape, "more than 254 distinct inner products");
  spectrum_.values = std::move(distinct);

  relation_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      auto it = std::find(spectrum_.values.begin(), spectrum_.values.end(), gram_(x, y));
      auto idx = static_cast<std::uint8_t>(1 + (it - spectrum_.values.begin()));
      relation_[x * n + y] = idx;
      relation_[y * n + x] = idx;
    }
  }
}

const Spectrum& spectrum(const SphericalCode& code) { return code.spectrum(); }

DistanceDistribution distance_distribution(const SphericalCode& code) {
  const std::size_t n = code.size();
  const std::size_t s = code.spectrum().s();
  DistanceDistribution dd;
  dd.counts.assign(n, std::vector<std::size_t>(s, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) ++dd.counts[x][code.relation(x, y) - 1];
    }
  }
  dd.uniform = std::all_of(dd.counts.begin(), dd.counts.end(), [&](const auto& row) { return row == dd.counts.front(); });
  return dd;
}

}  // namespace scdt
