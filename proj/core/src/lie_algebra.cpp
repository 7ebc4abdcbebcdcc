#include "symlie/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "symlie/errors.hpp"
#include "symlie/linalg.hpp"

namespace symlie {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::RH: return "RH";
    case Family::HEIS: return "HEIS";
    case Family::Generic: return "GENERIC";
  }
  return "GENERIC";
}

Family parse_family(std::string_view text) {
  if (text == "RH") return Family::RH;
  if (text == "HEIS") return Family::HEIS;
  if (text == "GENERIC") return Family::Generic;
  fail(ErrorKind::ParseError, "unknown family '" + std::string(text) + "'");
}

LieAlgebra::LieAlgebra(std::size_t dim, Family family, std::vector<StructureConstant> constants)
    : dim_(dim), family_(family) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> table;
  for (auto& c : constants) {
    if (c.i >= dim || c.j >= dim || c.k >= dim)
      fail(ErrorKind::InvalidStructure, "structure constant index out of range");
    if (c.i == c.j) fail(ErrorKind::InvalidStructure, "[e_i, e_i] must vanish");
    if (c.i > c.j) {
      std::swap(c.i, c.j);
      c.value = -c.value;
    }
    table[{c.i, c.j, c.k}] += c.value;
  }
  for (auto& [key, value] : table) {
    if (value.is_zero()) continue;
    constants_.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), value});
  }
}

Vector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) fail(ErrorKind::ShapeMismatch, "bracket argument length");
  Vector out(dim_);
  for (const auto& c : constants_) {
    // x_i y_j - x_j y_i multiplies [e_i, e_j].
    const Rational coeff = x[c.i] * y[c.j] - x[c.j] * y[c.i];
    if (!coeff.is_zero()) out[c.k] += coeff * c.value;
  }
  return out;
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  return bracket(unit_vector(dim_, i), unit_vector(dim_, j));
}

LieAlgebra build_family(Family family, std::size_t n) {
  switch (family) {
    case Family::RH: {
      if (n < 1) fail(ErrorKind::InvalidDimension, "RH family needs n >= 1");
      std::vector<StructureConstant> cs;
      for (std::size_t k = 1; k < 2 * n; ++k) cs.push_back({0, k, k, Rational(1)});
      return LieAlgebra(2 * n, Family::RH, std::move(cs));
    }
    case Family::HEIS:
      if (n < 2) fail(ErrorKind::InvalidDimension, "HEIS family needs n >= 2");
      return LieAlgebra(2 * n, Family::HEIS, {{0, 1, 2 * n - 1, Rational(1)}});
    case Family::Generic:
      break;
  }
  fail(ErrorKind::UnsupportedFamily, "no built-in generic family");
}

bool check_jacobi(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(unit_vector(d, i));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector xy = g.basis_bracket(i, j);
      for (std::size_t k = j + 1; k < d; ++k) {
        Vector sum = g.bracket(xy, basis[k]);
        const Vector yz = g.basis_bracket(j, k);
        const Vector zx = g.basis_bracket(k, i);
        const Vector t2 = g.bracket(yz, basis[i]);
        const Vector t3 = g.bracket(zx, basis[j]);
        for (std::size_t l = 0; l < d; ++l) sum[l] += t2[l] + t3[l];
        if (!is_zero(sum)) return false;
      }
    }
  }
  return true;
}

bool is_automorphism(const LieAlgebra& g, const Matrix& phi) {
  if (phi.rows() != g.dim() || phi.cols() != g.dim())
    fail(ErrorKind::ShapeMismatch, "automorphism candidate has wrong size");
  if (rank(phi) != g.dim()) fail(ErrorKind::SingularMatrix, "automorphism candidate is singular");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Vector pi = phi.column(i);
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      if (phi * g.basis_bracket(i, j) != g.bracket(pi, phi.column(j))) return false;
    }
  }
  return true;
}

bool in_scaled_aut(const LieAlgebra& g, const Matrix& m) {
  const std::size_t d = g.dim();
  if (m.rows() != d || m.cols() != d) fail(ErrorKind::ShapeMismatch, "pattern candidate has wrong size");
  switch (g.family()) {
    case Family::RH:
      for (std::size_t j = 1; j < d; ++j)
        if (!m(0, j).is_zero()) return false;
      break;
    case Family::HEIS:
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 2; j < d; ++j)
          if (!m(i, j).is_zero()) return false;
      for (std::size_t i = 0; i + 1 < d; ++i)
        if (!m(i, d - 1).is_zero()) return false;
      break;
    case Family::Generic:
      fail(ErrorKind::UnsupportedFamily, "no automorphism pattern for generic algebras");
  }
  return rank(m) == d;
}

Rational aut_scale(const LieAlgebra& g, const Matrix& m) {
  if (!in_scaled_aut(g, m)) fail(ErrorKind::InvalidStructure, "matrix is not a scaled automorphism");
  if (g.family() == Family::RH) return m(0, 0);
  const std::size_t d = g.dim();
  return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / m(d - 1, d - 1);
}

}  // namespace symlie
