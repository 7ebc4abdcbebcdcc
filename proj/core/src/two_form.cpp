#include "symlie/two_form.hpp"

#include "symlie/errors.hpp"

namespace symlie {

TwoForm::TwoForm(Matrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_skew()) fail(ErrorKind::NotSkew, "two-form matrix must be skew-symmetric");
}

TwoForm TwoForm::elementary(std::size_t dim, std::size_t i, std::size_t j) {
  Matrix m(dim, dim);
  m(i, j) = 1;
  m(j, i) = -1;
  return TwoForm(std::move(m));
}

TwoForm TwoForm::canonical(std::size_t n) { return TwoForm(standard_j(n)); }

Rational TwoForm::operator()(std::span<const Rational> x, std::span<const Rational> y) const {
  return dot(x, matrix_ * y);
}

Matrix standard_j(std::size_t n) {
  Matrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

}  // namespace symlie
