#include "symlie/subspace.hpp"

#include "symlie/errors.hpp"
#include "symlie/linalg.hpp"

namespace symlie {

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_dim_) fail(ErrorKind::ShapeMismatch, "subspace vector length");
  if (!basis_.empty() && rank(as_matrix()) != basis_.size())
    fail(ErrorKind::InvalidStructure, "subspace basis vectors are dependent");
}

Subspace Subspace::span_of(std::size_t ambient_dim, std::span<const Vector> vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) fail(ErrorKind::ShapeMismatch, "subspace vector length");
  std::vector<Vector> picked;
  if (!vectors.empty()) {
    const Matrix m = Matrix::from_columns(vectors, ambient_dim);
    for (auto p : row_echelon(m).pivots) picked.push_back(vectors[p]);
  }
  return Subspace(ambient_dim, std::move(picked));
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vector(ambient_dim, i));
  return Subspace(ambient_dim, std::move(basis));
}

Matrix Subspace::as_matrix() const { return Matrix::from_columns(basis_, ambient_dim_); }

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) fail(ErrorKind::ShapeMismatch, "membership vector length");
  if (basis_.empty()) return is_zero(v);
  return solve_in_span(as_matrix(), v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

bool same_span(const Subspace& a, const Subspace& b) {
  return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.contains(b);
}

Subspace omega_complement(const TwoForm& w, const Subspace& W) {
  if (w.dim() != W.ambient_dim()) fail(ErrorKind::ShapeMismatch, "form and subspace dimensions differ");
  if (W.dim() == 0) return Subspace::whole(w.dim());
  // Row k is (W u_k)^T, so row k . v = w(v, u_k) up to sign.
  const Matrix constraints = (w.matrix() * W.as_matrix()).transpose();
  return Subspace(w.dim(), kernel_basis(constraints));
}

SubspaceFlags predicates(const LieAlgebra& g, const TwoForm& w, const Subspace& W) {
  if (g.dim() != W.ambient_dim() || w.dim() != W.ambient_dim())
    fail(ErrorKind::ShapeMismatch, "algebra, form and subspace dimensions differ");
  SubspaceFlags flags;
  const auto& basis = W.basis();

  flags.is_isotropic = true;
  for (std::size_t a = 0; a < basis.size() && flags.is_isotropic; ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!w(basis[a], basis[b]).is_zero()) {
        flags.is_isotropic = false;
        break;
      }
  flags.is_lagrangian =
      flags.is_isotropic && W.dim() == omega_complement(w, W).dim();

  flags.is_subalgebra = true;
  for (std::size_t a = 0; a < basis.size() && flags.is_subalgebra; ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!W.contains(g.bracket(basis[a], basis[b]))) {
        flags.is_subalgebra = false;
        break;
      }

  flags.is_ideal = flags.is_subalgebra;
  for (std::size_t a = 0; a < basis.size() && flags.is_ideal; ++a)
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!W.contains(g.bracket(basis[a], unit_vector(g.dim(), i)))) {
        flags.is_ideal = false;
        break;
      }
  return flags;
}

}  // namespace symlie
