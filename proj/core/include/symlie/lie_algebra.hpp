#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "symlie/matrix.hpp"

namespace symlie {

/// RH: [e_1, e_k] = e_k for k = 2..2n (the solvable algebra of real hyperbolic
/// space). HEIS: [e_1, e_2] = e_2n (Heisenberg plus an abelian summand).
enum class Family { RH, HEIS, Generic };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

/// [e_i, e_j] has coefficient `value` on e_k. Indices are 0-based with i < j.
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rational value;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// A Lie algebra on R^dim given by a sparse structure-constant table.
/// Antisymmetry is built in; the Jacobi identity is checked by check_jacobi.
class LieAlgebra {
 public:
  /// Entries with i > j are stored as (j, i, k, -value); repeated (i, j, k)
  /// entries are summed. Throws InvalidStructure for i == j or out-of-range
  /// indices.
  LieAlgebra(std::size_t dim, Family family, std::vector<StructureConstant> constants);

  std::size_t dim() const { return dim_; }
  Family family() const { return family_; }
  const std::vector<StructureConstant>& constants() const { return constants_; }

  /// Bilinear extension of the table. Throws ShapeMismatch on wrong lengths.
  Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  Vector basis_bracket(std::size_t i, std::size_t j) const;

 private:
  std::size_t dim_;
  Family family_;
  std::vector<StructureConstant> constants_;
};

/// RH needs n >= 1, HEIS needs n >= 2. Throws InvalidDimension otherwise and
/// UnsupportedFamily for Generic.
LieAlgebra build_family(Family family, std::size_t n);

bool check_jacobi(const LieAlgebra& g);

/// phi [x, y] == [phi x, phi y] on all basis pairs. Throws SingularMatrix when
/// phi is not invertible.
bool is_automorphism(const LieAlgebra& g, const Matrix& phi);

/// Membership in the scaled automorphism group via its block zero pattern:
/// RH has first row (*, 0, ..., 0); HEIS is block lower triangular for block
/// sizes (2, 2n-3, 1). Throws UnsupportedFamily for Generic.
bool in_scaled_aut(const LieAlgebra& g, const Matrix& m);

/// For M in the scaled automorphism group, the scalar c with M / c an
/// automorphism: RH uses M(1,1); HEIS uses det(upper 2x2 block) / M(2n,2n).
Rational aut_scale(const LieAlgebra& g, const Matrix& m);

}  // namespace symlie
