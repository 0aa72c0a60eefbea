#include "scdt/linalg.hpp"

#include <stdexcept>

namespace scdt {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = QuadExt(1);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const QuadExt& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

PsdCheck psd_rank(Matrix m, std::optional<std::size_t> max_rank) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("psd_rank: matrix not square");
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  QuadExt prev(1);
  PsdCheck out;

  while (!active.empty()) {
    std::size_t pivot_pos = active.size();
    for (std::size_t a = 0; a < active.size(); ++a) {
      int sg = m(active[a], active[a]).sign();
      if (sg < 0) return out;  // psd = false
      if (sg > 0 && pivot_pos == active.size()) pivot_pos = a;
    }
    if (pivot_pos == active.size()) {
      // zero diagonal: the remaining block must vanish entirely
      for (std::size_t a = 0; a < active.size(); ++a) {
        for (std::size_t b = a + 1; b < active.size(); ++b) {
          if (!m(active[a], active[b]).is_zero()) return out;
        }
      }
      break;
    }
    const std::size_t p = active[pivot_pos];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    ++out.rank;
    if (max_rank && out.rank > *max_rank) {
      out.rank_exceeded = true;
      return out;
    }
    const QuadExt piv = m(p, p);
    for (std::size_t a = 0; a < active.size(); ++a) {
      const std::size_t i = active[a];
      const QuadExt mip = m(i, p);
      for (std::size_t b = a; b < active.size(); ++b) {
        const std::size_t j = active[b];
        QuadExt v = piv * m(i, j);
        if (!mip.is_zero()) v -= mip * m(p, j);
        v /= prev;
        m(i, j) = v;
        m(j, i) = v;
      }
    }
    prev = piv;
  }
  out.psd = true;
  return out;
}

std::vector<QuadExt> solve(Matrix a, std::vector<QuadExt> b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw FieldError("singular linear system");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    const QuadExt inv = QuadExt(1) / a(col, col);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const QuadExt f = a(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

Polynomial characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<QuadExt> c(n + 1, QuadExt(0));
  c[n] = QuadExt(1);
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Matrix amk = a * mk;
    QuadExt tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / QuadExt(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

}  // namespace scdt
