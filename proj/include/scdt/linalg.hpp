#pragma once

#include <optional>
#include <vector>

#include "scdt/polynomial.hpp"
#include "scdt/quad_ext.hpp"

namespace scdt {

/// Dense row-major matrix of exact field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const QuadExt& fill = QuadExt(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QuadExt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QuadExt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<QuadExt>& data() const { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QuadExt> data_;
};

struct PsdCheck {
  bool psd = false;
  std::size_t rank = 0;
  /// Set when elimination stopped because the rank passed `max_rank`.
  bool rank_exceeded = false;
};

/// Positive-semidefiniteness and rank of a symmetric matrix by fraction-free
/// symmetric elimination with diagonal pivoting: a negative pivot, or a zero
/// diagonal with a nonzero off-diagonal entry in the same row, refutes PSD.
PsdCheck psd_rank(Matrix m, std::optional<std::size_t> max_rank = {});

/// Solves A x = b exactly. Throws FieldError if A is singular.
std::vector<QuadExt> solve(Matrix a, std::vector<QuadExt> b);

/// det(x I - A) by the Faddeev-LeVerrier recurrence.
Polynomial characteristic_polynomial(const Matrix& a);

}  // namespace scdt
