#include "sampling.hpp"

#include "symlie/errors.hpp"
#include "symlie/forms.hpp"
#include "symlie/linalg.hpp"

namespace symlie::cli {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr int kMaxDraws = 1000;

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  return splitmix(splitmix(splitmix(seed) ^ stream) ^ trial);
}

int Sampler::small_integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::small_rational() {
  const int p = small_integer(-5, 5);
  const int q = small_integer(1, 3);
  return Rational(p, q);
}

Matrix Sampler::invertible(std::size_t dim) {
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = small_rational();
    if (rank(m) == dim) return m;
  }
  fail(ErrorKind::VerificationFailure, "could not draw an invertible matrix");
}

TwoForm Sampler::nondegenerate_form(std::size_t dim) {
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        m(i, j) = small_rational();
        m(j, i) = -m(i, j);
      }
    TwoForm w(std::move(m));
    if (is_nondegenerate(w)) return w;
  }
  fail(ErrorKind::VerificationFailure, "could not draw a nondegenerate form");
}

TwoForm Sampler::closed_nondegenerate_form(const LieAlgebra& g) {
  const auto basis = cocycle_space(g);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix m(g.dim(), g.dim());
    for (const auto& b : basis) m += Rational(small_integer(-5, 5)) * b.matrix();
    TwoForm w(std::move(m));
    if (is_nondegenerate(w)) return w;
  }
  fail(ErrorKind::DegenerateForm, "no nondegenerate closed form found by sampling");
}

}  // namespace symlie::cli
