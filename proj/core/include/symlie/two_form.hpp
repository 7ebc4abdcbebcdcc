#pragma once

#include <cstddef>
#include <span>

#include "symlie/matrix.hpp"

namespace symlie {

/// A skew-symmetric bilinear form w(x, y) = x^T W y. Degenerate forms are
/// representable so that closed forms make up a vector space.
class TwoForm {
 public:
  TwoForm() = default;
  /// Throws NotSkew unless `matrix` is square and skew-symmetric.
  explicit TwoForm(Matrix matrix);

  /// The form with W(i, j) = 1, W(j, i) = -1 and zeros elsewhere.
  static TwoForm elementary(std::size_t dim, std::size_t i, std::size_t j);
  /// The canonical form e^1 ^ e^{n+1} + ... + e^n ^ e^{2n}; its matrix is J.
  static TwoForm canonical(std::size_t n);

  std::size_t dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

  Rational operator()(std::span<const Rational> x, std::span<const Rational> y) const;

  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  Matrix matrix_;
};

/// The block matrix (0 I_n; -I_n 0).
Matrix standard_j(std::size_t n);

}  // namespace symlie
