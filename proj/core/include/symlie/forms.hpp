#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symlie/lie_algebra.hpp"
#include "symlie/two_form.hpp"

namespace symlie {

bool is_nondegenerate(const TwoForm& w);

/// g.w(x, y) = w(g^-1 x, g^-1 y), i.e. the matrix g^-T W g^-1.
TwoForm pullback(const TwoForm& w, const Matrix& g);

/// dw(x, y, z) = w(x, [y, z]) + w(z, [x, y]) + w(y, [z, x]).
Rational d_omega(const LieAlgebra& g, const TwoForm& w, std::span<const Rational> x,
                 std::span<const Rational> y, std::span<const Rational> z);

bool is_closed(const LieAlgebra& g, const TwoForm& w);

/// A basis triple i < j < k (0-based) with dw(e_i, e_j, e_k) != 0, first in
/// lexicographic order, together with that value.
struct NonClosedWitness {
  std::array<std::size_t, 3> triple;
  Rational value;
};
std::optional<NonClosedWitness> first_nonclosed_triple(const LieAlgebra& g, const TwoForm& w);

/// Pairs (i, j), i < j, in lexicographic order: the coordinates of skew forms.
std::vector<std::pair<std::size_t, std::size_t>> skew_coordinates(std::size_t dim);

/// Basis of the closed 2-forms Z^2(g), the kernel of w -> dw.
std::vector<TwoForm> cocycle_space(const LieAlgebra& g);

}  // namespace symlie
