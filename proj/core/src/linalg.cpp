#include "symlie/linalg.hpp"

#include <string>
#include <utility>

#include "symlie/errors.hpp"

namespace symlie {

namespace {

void require_square(const Matrix& m, const char* op) {
  if (!m.is_square()) {
    fail(ErrorKind::ShapeMismatch, std::string(op) + " needs a square matrix, got " +
                                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void scale_row(Matrix& m, std::size_t r, const Rational& s) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(r, j).is_zero()) m(r, j) *= s;
}

// row[dst] += s * row[src]
void add_row(Matrix& m, std::size_t dst, std::size_t src, const Rational& s) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(src, j).is_zero()) m(dst, j) += s * m(src, j);
}

// col[dst] += s * col[src]
void add_col(Matrix& m, std::size_t dst, std::size_t src, const Rational& s) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, src).is_zero()) m(i, dst) += s * m(i, src);
}

}  // namespace

RowEchelon row_echelon(const Matrix& m) {
  RowEchelon out{m, Matrix::identity(m.rows()), {}};
  Matrix& a = out.reduced;
  Matrix& t = out.transform;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      swap_rows(a, pivot, row);
      swap_rows(t, pivot, row);
    }
    const Rational inv = a(row, col).inverse();
    scale_row(a, row, inv);
    scale_row(t, row, inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational factor = -a(r, col);
      add_row(a, r, row, factor);
      add_row(t, r, row, factor);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).rank(); }

Rational determinant(const Matrix& m) {
  require_square(m, "determinant");
  Matrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      swap_rows(a, pivot, col);
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      add_row(a, r, col, -(a(r, col) * inv));
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  RowEchelon e = row_echelon(m);
  if (e.rank() != m.rows()) fail(ErrorKind::SingularMatrix, "matrix is not invertible");
  return std::move(e.transform);
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_in_span(const Matrix& basis, std::span<const Rational> v) {
  if (v.size() != basis.rows()) fail(ErrorKind::ShapeMismatch, "solve_in_span length");
  Matrix aug(basis.rows(), basis.cols() + 1);
  aug.set_block(0, 0, basis);
  for (std::size_t i = 0; i < v.size(); ++i) aug(i, basis.cols()) = v[i];
  const RowEchelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == basis.cols()) return std::nullopt;
  Vector coords(basis.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) coords[e.pivots[k]] = e.reduced(k, basis.cols());
  return coords;
}

bool is_permutation_matrix(const Matrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  std::vector<int> col_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = m(i, j);
      if (x.is_zero()) continue;
      if (!x.is_one()) return false;
      ++row_count;
      ++col_count[j];
    }
    if (row_count != 1) return false;
  }
  for (int c : col_count)
    if (c != 1) return false;
  return true;
}

LpuDecomposition lpu_decompose(const Matrix& d) {
  require_square(d, "lpu_decompose");
  const std::size_t n = d.rows();
  LpuDecomposition out{Matrix::identity(n), Matrix::identity(n), d};
  Matrix& a = out.P;
  for (std::size_t row = 0; row < n; ++row) {
    std::size_t col = 0;
    while (col < n && a(row, col).is_zero()) ++col;
    if (col == n) fail(ErrorKind::SingularMatrix, "lpu_decompose of a singular matrix");

    const Rational inv = a(row, col).inverse();
    scale_row(a, row, inv);
    scale_row(out.L, row, inv);
    for (std::size_t k = col + 1; k < n; ++k) {
      if (a(row, k).is_zero()) continue;
      const Rational factor = -a(row, k);
      add_col(a, k, col, factor);
      add_col(out.U, k, col, factor);
    }
    for (std::size_t r = row + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational factor = -a(r, col);
      add_row(a, r, row, factor);
      add_row(out.L, r, row, factor);
    }
  }
  return out;
}

}  // namespace symlie
