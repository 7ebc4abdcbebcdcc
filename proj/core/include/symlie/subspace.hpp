#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symlie/lie_algebra.hpp"
#include "symlie/matrix.hpp"
#include "symlie/two_form.hpp"

namespace symlie {

/// A linear subspace of R^ambient_dim with an independent basis.
class Subspace {
 public:
  /// Throws ShapeMismatch for wrong vector lengths and InvalidStructure when
  /// the vectors are dependent.
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

  /// Independent subset of `vectors` (first occurrences kept) spanning the same space.
  static Subspace span_of(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  /// ambient_dim x dim matrix whose columns are the basis.
  Matrix as_matrix() const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  friend bool same_span(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
};

/// W^perp = {v : w(v, u) = 0 for all u in W}.
Subspace omega_complement(const TwoForm& w, const Subspace& W);

struct SubspaceFlags {
  bool is_subalgebra = false;
  bool is_ideal = false;
  bool is_isotropic = false;
  bool is_lagrangian = false;

  friend bool operator==(const SubspaceFlags&, const SubspaceFlags&) = default;
};

SubspaceFlags predicates(const LieAlgebra& g, const TwoForm& w, const Subspace& W);

}  // namespace symlie
