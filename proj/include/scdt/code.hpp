#pragma once

// Spherical codes represented by their exact Gram matrices.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scdt/linalg.hpp"
#include "scdt/quad_ext.hpp"

namespace scdt {

enum class CodeErrorKind {
  kShape,
  kDiagonal,
  kSymmetry,
  kRange,
  kDuplicate,
  kRadicand,
  kNorm,
  kNotPsd,
  kRank,
};

/// A Gram matrix or coordinate set violating a code invariant.
class CodeError : public std::invalid_argument {
 public:
  CodeError(CodeErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  CodeErrorKind kind() const { return kind_; }

 private:
  CodeErrorKind kind_;
};

struct Coordinates {
  QuadExt norm2;
  std::vector<std::vector<QuadExt>> points;
};

/// Distinct off-diagonal inner products a_1 > a_2 > ... > a_s.
struct Spectrum {
  std::vector<QuadExt> values;
  std::size_t s() const { return values.size(); }
};

/// counts[x][i] = number of y with <x, y> = a_{i+1}.
struct DistanceDistribution {
  std::vector<std::vector<std::size_t>> counts;
  bool uniform = false;
  /// The common row when uniform.
  std::vector<std::size_t> common() const { return uniform ? counts.front() : std::vector<std::size_t>{}; }
};

/// Validated spherical code: Gram diagonal 1, symmetric, off-diagonal in
/// [-1, 1), entries in Q or one Q(sqrt(d)), PSD of rank <= dim. Immutable.
class SphericalCode {
 public:
  static SphericalCode from_gram(int dim, Matrix gram, std::string label);
  /// gram[x][y] = <x, y> / norm2; every point must have squared norm norm2.
  static SphericalCode from_coords(int dim, std::vector<std::vector<QuadExt>> points, const QuadExt& norm2,
                                   std::string label);

  int dim() const { return dim_; }
  std::size_t size() const { return gram_.rows(); }
  const std::string& label() const { return label_; }
  const Matrix& gram() const { return gram_; }
  const QuadExt& gram(std::size_t x, std::size_t y) const { return gram_(x, y); }
  const std::optional<Coordinates>& coordinates() const { return coords_; }
  std::int64_t radicand() const { return radicand_; }
  std::size_t rank() const { return rank_; }

  const Spectrum& spectrum() const { return spectrum_; }
  /// Relation index of a pair: 0 on the diagonal, i for a_i.
  std::uint8_t relation(std::size_t x, std::size_t y) const { return relation_[x * size() + y]; }
  const std::vector<std::uint8_t>& relation_matrix() const { return relation_; }

 private:
  SphericalCode() = default;
  void validate_and_index();

  int dim_ = 0;
  Matrix gram_;
  std::string label_;
  std::optional<Coordinates> coords_;
  std::int64_t radicand_ = 0;
  std::size_t rank_ = 0;
  Spectrum spectrum_;
  std::vector<std::uint8_t> relation_;
};

const Spectrum& spectrum(const SphericalCode& code);
DistanceDistribution distance_distribution(const SphericalCode& code);

}  // namespace scdt
