#include "symlie/symplectic.hpp"

#include <string>

#include "symlie/errors.hpp"
#include "symlie/linalg.hpp"

namespace symlie {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    fail(ErrorKind::ShapeMismatch, std::string(what) + " must be " + std::to_string(rows) + "x" +
                                       std::to_string(cols) + ", got " + std::to_string(m.rows()) +
                                       "x" + std::to_string(m.cols()));
  }
}

void require_invertible(const SymplecticContext& ctx, const Matrix& m) {
  require_shape(m, ctx.dim(), ctx.dim(), "matrix");
  if (rank(m) != ctx.dim()) fail(ErrorKind::SingularMatrix, "matrix is not in GL(2n)");
}

Matrix swap_matrix(std::size_t n, std::size_t a, std::size_t b) {
  Matrix p = Matrix::identity(n);
  p(a, a) = 0;
  p(b, b) = 0;
  p(a, b) = 1;
  p(b, a) = 1;
  return p;
}

std::size_t one_position_in_row(const Matrix& p, std::size_t row) {
  for (std::size_t j = 0; j < p.cols(); ++j)
    if (!p(row, j).is_zero()) return j;
  fail(ErrorKind::NotPermutation, "empty row");
}

}  // namespace

SymplecticContext::SymplecticContext(std::size_t n)
    : n_(n), j_(standard_j(n)), omega0_(TwoForm::canonical(n)) {
  if (n == 0) fail(ErrorKind::InvalidDimension, "half dimension must be positive");
}

bool is_symplectic(const SymplecticContext& ctx, const Matrix& a) {
  require_shape(a, ctx.dim(), ctx.dim(), "symplectic candidate");
  return a.transpose() * ctx.J() * a == ctx.J();
}

Matrix build_generator(const SymplecticContext& ctx, GeneratorKind kind, const Matrix& payload) {
  const std::size_t n = ctx.n();
  require_shape(payload, n, n, "generator payload");
  const Matrix id = Matrix::identity(n);
  const Matrix zero = Matrix::zeros(n, n);
  switch (kind) {
    case GeneratorKind::Type1Upper:
    case GeneratorKind::Type1Lower:
      if (!payload.is_symmetric()) fail(ErrorKind::NotSymmetric, "Type 1 payload must be symmetric");
      return kind == GeneratorKind::Type1Upper ? Matrix::from_blocks(id, payload, zero, id)
                                               : Matrix::from_blocks(id, zero, payload, id);
    case GeneratorKind::Type2:
      return Matrix::block_diagonal(payload, inverse(payload).transpose());
    case GeneratorKind::Type3:
      if (!is_permutation_matrix(payload))
        fail(ErrorKind::NotPermutation, "Type 3 payload must be a permutation matrix");
      return Matrix::block_diagonal(payload, payload);
  }
  fail(ErrorKind::InvalidStructure, "unknown generator kind");
}

CornerTrace nonsingular_corner_trace(const SymplecticContext& ctx, const Matrix& m) {
  require_invertible(ctx, m);
  const std::size_t n = ctx.n();
  CornerTrace out{Matrix::identity(2 * n), {}};

  while (true) {
    const Matrix current = m * out.S;
    const RowEchelon corner = row_echelon(current.block(0, 0, n, n));
    const std::size_t r = corner.rank();
    if (!out.corner_ranks.empty() && r <= out.corner_ranks.back()) {
      fail(ErrorKind::VerificationFailure, "corner rank did not increase");
    }
    out.corner_ranks.push_back(r);
    if (r == n) break;

    // g1 A g2 = diag(I_r, 0): g1 is the echelon transform; g2 moves the pivot
    // columns to the front and clears the rest of the pivot rows.
    const Matrix& g1 = corner.transform;
    Matrix g2 = Matrix::zeros(n, n);
    {
      std::vector<bool> is_pivot(n, false);
      for (auto p : corner.pivots) is_pivot[p] = true;
      std::vector<std::size_t> order(corner.pivots.begin(), corner.pivots.end());
      for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) order.push_back(j);
      Matrix perm(n, n);
      for (std::size_t k = 0; k < n; ++k) perm(order[k], k) = 1;
      Matrix clear = Matrix::identity(n);
      const Matrix permuted = corner.reduced * perm;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = r; j < n; ++j) clear(i, j) = -permuted(i, j);
      g2 = perm * clear;
    }

    Matrix step = build_generator(ctx, GeneratorKind::Type2, g2);
    const Matrix k = Matrix::block_diagonal(g1, Matrix::identity(n));
    const Matrix m1 = k * current * step;
    const Matrix alpha = m1.block(r, n, n - r, r);
    const Matrix beta = m1.block(r, n + r, n - r, n - r);

    if (beta.is_zero()) {
      std::size_t c = 0;
      while (c < r && is_zero(alpha.column(c))) ++c;
      if (c == r) fail(ErrorKind::VerificationFailure, "alpha and beta both vanish");
      const Matrix gamma = Matrix::unit(r, n - r, c, 0);
      Matrix shear = Matrix::identity(n);
      shear.set_block(r, 0, -gamma.transpose());
      step = step * build_generator(ctx, GeneratorKind::Type2, shear);
    }

    Matrix lower = Matrix::zeros(n, n);
    for (std::size_t i = r; i < n; ++i) lower(i, i) = 1;
    step = step * build_generator(ctx, GeneratorKind::Type1Lower, lower);
    out.S = out.S * step;
  }
  return out;
}

Matrix nonsingular_corner(const SymplecticContext& ctx, const Matrix& m) {
  return nonsingular_corner_trace(ctx, m).S;
}

Matrix strict_lower_completion(const Matrix& b) {
  if (!b.is_square()) fail(ErrorKind::ShapeMismatch, "completion needs a square block");
  const std::size_t n = b.rows();
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = -b(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      c(i, j) = -b(i, j);
      c(j, i) = -b(i, j);
    }
  }
  return c;
}

bool is_strictly_lower_triangular(const Matrix& t) {
  if (!t.is_square()) return false;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = i; j < t.cols(); ++j)
      if (!t(i, j).is_zero()) return false;
  return true;
}

SymplecticQR symplectic_qr(const SymplecticContext& ctx, const Matrix& m) {
  const std::size_t n = ctx.n();
  const Matrix s1 = nonsingular_corner(ctx, m);
  const Matrix m1 = m * s1;
  const Matrix s2 = build_generator(ctx, GeneratorKind::Type2, inverse(m1.block(0, 0, n, n)));
  const Matrix m2 = m1 * s2;
  const Matrix s3 = build_generator(ctx, GeneratorKind::Type1Upper,
                                    strict_lower_completion(m2.block(0, n, n, n)));

  SymplecticQR out;
  out.S = s1 * s2 * s3;
  out.product = m * out.S;
  out.T = out.product.block(0, n, n, n);
  if (out.product.block(0, 0, n, n) != Matrix::identity(n) ||
      !is_strictly_lower_triangular(out.T) || !is_symplectic(ctx, out.S)) {
    fail(ErrorKind::VerificationFailure, "symplectic QR contract violated");
  }
  return out;
}

Matrix cyclic_shift_permutation(std::size_t n) {
  Matrix p(n, n);
  if (n == 0) return p;
  p(n - 1, 0) = 1;
  for (std::size_t j = 1; j < n; ++j) p(j - 1, j) = 1;
  return p;
}

PermutationSplit permutation_split(const Matrix& p, std::size_t n) {
  if (n < 2) fail(ErrorKind::InvalidDimension, "permutation_split needs n >= 2");
  if (p.rows() != n || p.cols() != n) fail(ErrorKind::ShapeMismatch, "permutation size");
  if (!is_permutation_matrix(p)) fail(ErrorKind::NotPermutation, "input is not a permutation");

  const std::size_t last = one_position_in_row(p, n - 1);
  PermutationSplit out{Matrix::identity(n), Matrix::identity(n), PermutationClass::Identity};

  // A 1 already in the corner means the identity case, which for n = 2 takes
  // precedence over the "first two columns" test.
  if (last != n - 1 && last < 2) {
    out.result = PermutationClass::FullCycle;
    if (last == 1) out.K1 = swap_matrix(n, 0, 1);
  } else if (last != n - 1) {
    out.K1 = swap_matrix(n, last, n - 1);
  }

  const Matrix shifted = p * out.K1.transpose();
  const Matrix q = out.result == PermutationClass::FullCycle ? shifted.block(0, 1, n - 1, n - 1)
                                                             : shifted.block(0, 0, n - 1, n - 1);
  out.K2.set_block(0, 0, q.transpose());

  const Matrix target = out.result == PermutationClass::FullCycle ? cyclic_shift_permutation(n)
                                                                  : Matrix::identity(n);
  if (out.K2 * p * out.K1.transpose() != target) {
    fail(ErrorKind::VerificationFailure, "permutation split did not normalize");
  }
  return out;
}

Matrix darboux_basis(const SymplecticContext& ctx, const TwoForm& omega) {
  const std::size_t n = ctx.n();
  const std::size_t dim = ctx.dim();
  if (omega.dim() != dim) fail(ErrorKind::ShapeMismatch, "form dimension does not match 2n");

  std::vector<Vector> pending;
  for (std::size_t i = 0; i < dim; ++i) pending.push_back(unit_vector(dim, i));

  Matrix basis(dim, dim);
  for (std::size_t pair = 0; pair < n; ++pair) {
    Vector u = pending.front();
    pending.erase(pending.begin());

    auto partner = pending.end();
    Rational pairing;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      pairing = omega(u, *it);
      if (!pairing.is_zero()) {
        partner = it;
        break;
      }
    }
    if (partner == pending.end()) fail(ErrorKind::DegenerateForm, "no symplectic partner found");

    Vector v = *partner;
    pending.erase(partner);
    const Rational inv = pairing.inverse();
    for (auto& x : v) x *= inv;

    for (auto& w : pending) {
      const Rational wv = omega(w, v);
      const Rational wu = omega(w, u);
      for (std::size_t k = 0; k < dim; ++k) w[k] += wu * v[k] - wv * u[k];
    }
    basis.set_column(pair, u);
    basis.set_column(pair + n, v);
  }

  if (basis.transpose() * omega.matrix() * basis != ctx.J()) {
    fail(ErrorKind::VerificationFailure, "darboux basis check failed");
  }
  return basis;
}

}  // namespace symlie
