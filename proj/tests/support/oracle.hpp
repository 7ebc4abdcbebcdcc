#pragma once

// Reference computations for the tests. Everything here works on raw GMP
// rationals and dense arrays, and never calls into the library's elimination
// or bracket code, so agreement is meaningful.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "symlie/lie_algebra.hpp"
#include "symlie/matrix.hpp"
#include "symlie/two_form.hpp"

namespace oracle {

using Q = mpq_class;
using QMatrix = std::vector<std::vector<Q>>;
// tensor[i][j][k] = coefficient of e_k in [e_i, e_j].
using Tensor = std::vector<std::vector<std::vector<Q>>>;

QMatrix dense(const symlie::Matrix& m);
symlie::Matrix to_matrix(const QMatrix& m);

QMatrix multiply(const QMatrix& a, const QMatrix& b);
QMatrix transpose(const QMatrix& a);
QMatrix identity(std::size_t n);
QMatrix standard_j(std::size_t n);

/// Elimination choosing the last nonzero entry in each column as pivot.
Q determinant(const QMatrix& m);
QMatrix inverse(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Pfaffian by expansion along the first row.
Q pfaffian(const QMatrix& m);

/// Bracket tables written straight from the family definitions.
Tensor rh_tensor(std::size_t n);
Tensor heis_tensor(std::size_t n);
/// Structure constants of the same algebra in the basis given by the columns of p.
Tensor change_basis(const Tensor& c, const QMatrix& p);
Tensor from_algebra(const symlie::LieAlgebra& g);
symlie::LieAlgebra to_algebra(const Tensor& c);

bool jacobi_holds(const Tensor& c);

/// w(e_i,[e_j,e_k]) + w(e_k,[e_i,e_j]) + w(e_j,[e_k,e_i]) summed densely.
Q d_omega_basis(const Tensor& c, const QMatrix& w, std::size_t i, std::size_t j, std::size_t k);

/// dim Z^2 from the rank mod p of the integer closedness system. Needs
/// integral structure constants.
std::size_t cocycle_dimension_mod_p(const Tensor& c, std::uint64_t p = 1000003);

}  // namespace oracle
