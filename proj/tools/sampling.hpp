#pragma once

#include <cstdint>
#include <random>

#include "symlie/lie_algebra.hpp"
#include "symlie/matrix.hpp"
#include "symlie/two_form.hpp"

namespace symlie::cli {

/// Mixes a base seed with stream and trial indices (splitmix64 finalizer), so
/// every trial owns an independent, order-insensitive generator.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// p/q with p in [-5, 5] and q in [1, 3].
  Rational small_rational();
  int small_integer(int lo, int hi);

  Matrix invertible(std::size_t dim);
  TwoForm nondegenerate_form(std::size_t dim);
  /// Integer combination (coefficients in [-5, 5]) of closed forms, redrawn
  /// until nondegenerate.
  TwoForm closed_nondegenerate_form(const LieAlgebra& g);

 private:
  std::mt19937_64 rng_;
};

}  // namespace symlie::cli
