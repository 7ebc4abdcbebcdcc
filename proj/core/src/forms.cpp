#include "symlie/forms.hpp"

#include "symlie/errors.hpp"
#include "symlie/linalg.hpp"

namespace symlie {

namespace {

void require_matching(const LieAlgebra& g, const TwoForm& w) {
  if (g.dim() != w.dim()) fail(ErrorKind::ShapeMismatch, "form and algebra dimensions differ");
}

Rational d_omega_basis(const LieAlgebra& g, const TwoForm& w, std::size_t i, std::size_t j,
                       std::size_t k) {
  const std::size_t d = g.dim();
  return d_omega(g, w, unit_vector(d, i), unit_vector(d, j), unit_vector(d, k));
}

}  // namespace

bool is_nondegenerate(const TwoForm& w) { return !determinant(w.matrix()).is_zero(); }

TwoForm pullback(const TwoForm& w, const Matrix& g) {
  if (g.rows() != w.dim() || g.cols() != w.dim())
    fail(ErrorKind::ShapeMismatch, "pullback matrix has wrong size");
  const Matrix gi = inverse(g);
  return TwoForm(gi.transpose() * w.matrix() * gi);
}

Rational d_omega(const LieAlgebra& g, const TwoForm& w, std::span<const Rational> x,
                 std::span<const Rational> y, std::span<const Rational> z) {
  require_matching(g, w);
  return w(x, g.bracket(y, z)) + w(z, g.bracket(x, y)) + w(y, g.bracket(z, x));
}

std::optional<NonClosedWitness> first_nonclosed_triple(const LieAlgebra& g, const TwoForm& w) {
  require_matching(g, w);
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Rational v = d_omega_basis(g, w, i, j, k);
        if (!v.is_zero()) return NonClosedWitness{{i, j, k}, std::move(v)};
      }
  return std::nullopt;
}

bool is_closed(const LieAlgebra& g, const TwoForm& w) {
  return !first_nonclosed_triple(g, w).has_value();
}

std::vector<std::pair<std::size_t, std::size_t>> skew_coordinates(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<TwoForm> cocycle_space(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  const auto coords = skew_coordinates(d);

  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) triples.push_back({i, j, k});

  // Column c holds d(E_c) evaluated on every basis triple.
  Matrix system(triples.size(), coords.size());
  for (std::size_t c = 0; c < coords.size(); ++c) {
    const TwoForm e = TwoForm::elementary(d, coords[c].first, coords[c].second);
    for (std::size_t t = 0; t < triples.size(); ++t) {
      system(t, c) = d_omega_basis(g, e, triples[t][0], triples[t][1], triples[t][2]);
    }
  }

  std::vector<TwoForm> basis;
  for (const Vector& v : kernel_basis(system)) {
    Matrix m(d, d);
    for (std::size_t c = 0; c < coords.size(); ++c) {
      m(coords[c].first, coords[c].second) = v[c];
      m(coords[c].second, coords[c].first) = -v[c];
    }
    basis.emplace_back(std::move(m));
  }
  return basis;
}

}  // namespace symlie
