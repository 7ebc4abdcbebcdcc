#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symlie/matrix.hpp"

namespace symlie {

/// Reduced row echelon form together with the row operations that produced it:
/// `transform * input == reduced`, `pivots[k]` is the pivot column of row k.
struct RowEchelon {
  Matrix reduced;
  Matrix transform;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero
/// entry scanning top to bottom.
RowEchelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);

/// Throws SingularMatrix when m is not invertible, ShapeMismatch when not square.
Matrix inverse(const Matrix& m);

/// Basis of {v : m v = 0}; one vector per free column of the echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Coordinates c with columns(basis) * c == v, if v is in the column span.
std::optional<Vector> solve_in_span(const Matrix& basis, std::span<const Rational> v);

bool is_permutation_matrix(const Matrix& m);

/// L lower triangular, U upper triangular, with L * D * U == P a permutation.
struct LpuDecomposition {
  Matrix L;
  Matrix U;
  Matrix P;
};

/// Elimination without row exchanges: the pivot in each row is its leftmost
/// nonzero entry, cleared rightwards with column operations and downwards with
/// row operations. Throws SingularMatrix for singular D.
LpuDecomposition lpu_decompose(const Matrix& d);

}  // namespace symlie
