#pragma once

#include <cstddef>
#include <vector>

#include "symlie/matrix.hpp"
#include "symlie/two_form.hpp"

namespace symlie {

/// Fixed data for Sp(2n): the half dimension, J and the canonical form.
class SymplecticContext {
 public:
  explicit SymplecticContext(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  const Matrix& J() const { return j_; }
  const TwoForm& omega0() const { return omega0_; }

 private:
  std::size_t n_;
  Matrix j_;
  TwoForm omega0_;
};

/// A^T J A == J. Throws ShapeMismatch unless A is 2n x 2n.
bool is_symplectic(const SymplecticContext& ctx, const Matrix& a);

enum class GeneratorKind {
  Type1Upper,  // (I C; 0 I), C symmetric
  Type1Lower,  // (I 0; C I), C symmetric
  Type2,       // (A 0; 0 A^-T), A invertible
  Type3,       // (P 0; 0 P), P a permutation
};

Matrix build_generator(const SymplecticContext& ctx, GeneratorKind kind, const Matrix& payload);

/// Symplectic S such that the upper-left n x n block of M S is invertible.
Matrix nonsingular_corner(const SymplecticContext& ctx, const Matrix& m);

/// Same as nonsingular_corner, also reporting the corner rank before each
/// rank-boosting pass and after the last one.
struct CornerTrace {
  Matrix S;
  std::vector<std::size_t> corner_ranks;
};
CornerTrace nonsingular_corner_trace(const SymplecticContext& ctx, const Matrix& m);

/// M S = (I_n T; * *) with S symplectic and T strictly lower triangular.
struct SymplecticQR {
  Matrix S;
  Matrix T;
  Matrix product;
};

SymplecticQR symplectic_qr(const SymplecticContext& ctx, const Matrix& m);

/// The symmetric C whose sum with B is strictly lower triangular: the strict
/// lower part of C is minus the transposed strict upper part of B, and its
/// diagonal is minus the diagonal of B.
Matrix strict_lower_completion(const Matrix& b);

bool is_strictly_lower_triangular(const Matrix& t);

/// The n x n permutation matrix with P e_1 = e_n and P e_j = e_{j-1}: ones on
/// the superdiagonal and in the lower-left corner.
Matrix cyclic_shift_permutation(std::size_t n);

enum class PermutationClass { Identity, FullCycle };

/// K1 = diag(P2, P_{n-2}), K2 = diag(P_{n-1}, 1) with K2 P K1^T equal to the
/// identity or to cyclic_shift_permutation(n), as reported by `result`.
struct PermutationSplit {
  Matrix K1;
  Matrix K2;
  PermutationClass result;
};

PermutationSplit permutation_split(const Matrix& p, std::size_t n);

/// Columns form a symplectic basis for `omega`: B^T W B == J.
Matrix darboux_basis(const SymplecticContext& ctx, const TwoForm& omega);

}  // namespace symlie
