#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "symlie/lie_algebra.hpp"
#include "symlie/matrix.hpp"
#include "symlie/two_form.hpp"

namespace testgen {

// Seeded source of random exact objects. Rejection loops check
// nondegeneracy with the oracle, not with the library.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  /// p/q with |p| <= 9 and 1 <= q <= 4.
  symlie::Rational rational();
  symlie::Matrix matrix(std::size_t rows, std::size_t cols);
  symlie::Matrix symmetric(std::size_t n);
  symlie::Matrix permutation(std::size_t n);

  symlie::Matrix invertible(std::size_t dim);
  /// Permutation times a few unit-triangular shears: invertible, mostly zero
  /// and likely to hit the rank-deficient branches.
  symlie::Matrix sparse_invertible(std::size_t dim);
  /// Half dense, half sparse.
  symlie::Matrix mixed_invertible(std::size_t dim);

  /// Nonsingular matrix with the zero pattern of R^x Aut for the family.
  symlie::Matrix scaled_automorphism(symlie::Family family, std::size_t n);
  /// Product of random shears (I C; 0 I), (I 0; C I) and (A 0; 0 A^-T).
  symlie::Matrix symplectic(std::size_t n);

  symlie::TwoForm skew(std::size_t dim);
  symlie::TwoForm nondegenerate_form(std::size_t dim);
  symlie::TwoForm closed_nondegenerate_form(const symlie::LieAlgebra& g);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testgen
