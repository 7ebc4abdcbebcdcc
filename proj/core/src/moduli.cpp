#include "symlie/moduli.hpp"

#include <string>

#include "symlie/errors.hpp"
#include "symlie/linalg.hpp"
#include "symlie/symplectic.hpp"

namespace symlie {

namespace {

// Tracks h = left * g * right while left and right are built up one factor at
// a time; `current` always equals the product.
class DoubleCosetWalk {
 public:
  explicit DoubleCosetWalk(const Matrix& g)
      : left_(Matrix::identity(g.rows())), right_(Matrix::identity(g.rows())), current_(g) {}

  void apply_left(const Matrix& x) {
    left_ = x * left_;
    current_ = x * current_;
  }
  void apply_right(const Matrix& y) {
    right_ = right_ * y;
    current_ = current_ * y;
  }

  const Matrix& left() const { return left_; }
  const Matrix& right() const { return right_; }
  const Matrix& current() const { return current_; }

 private:
  Matrix left_;
  Matrix right_;
  Matrix current_;
};

Matrix block_unipotent_upper(const Matrix& a) {
  const std::size_t n = a.rows();
  return Matrix::from_blocks(Matrix::identity(n), a, Matrix::zeros(n, n), Matrix::identity(n));
}

// Conjugation pair for a change of basis A in GL(n): the pattern factor
// diag(A, P A^-T P^T) on the left and the Type 2 factor diag(A^-1, A^T) on
// the right. It keeps the lower-right block P and maps an upper-right block X
// to A X A^T.
void conjugate_by(DoubleCosetWalk& walk, const Matrix& a, const Matrix& p) {
  const Matrix a_inv = inverse(a);
  walk.apply_left(Matrix::block_diagonal(a, p * a_inv.transpose() * p.transpose()));
  walk.apply_right(Matrix::block_diagonal(a_inv, a.transpose()));
}

// Right-multiplies by (I C; 0 I) so that the upper-right block becomes
// strictly lower triangular.
void clear_upper_right(DoubleCosetWalk& walk, const SymplecticContext& ctx) {
  const std::size_t n = ctx.n();
  const Matrix c = strict_lower_completion(walk.current().block(0, n, n, n));
  walk.apply_right(build_generator(ctx, GeneratorKind::Type1Upper, c));
}

// A U with U x = e_1 for nonzero x: the inverse of the basis that starts with
// x and continues with the unit vectors other than the first nonzero slot.
Matrix compress_to_first_axis(const Vector& x) {
  const std::size_t m = x.size();
  std::size_t pivot = 0;
  while (x[pivot].is_zero()) ++pivot;
  Matrix basis(m, m);
  basis.set_column(0, x);
  std::size_t col = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == pivot) continue;
    basis(i, col++) = 1;
  }
  return inverse(basis);
}

ReductionWitness finish(const LieAlgebra& g_alg, const Matrix& g, const DoubleCosetWalk& walk,
                        Representative rep) {
  if (walk.current() != rep.matrix) {
    fail(ErrorKind::VerificationFailure, "reduction did not land on the representative");
  }
  ReductionWitness out{aut_scale(g_alg, walk.left()), walk.left(), walk.right(), std::move(rep)};
  if (!verify_witness(g_alg, g, out)) fail(ErrorKind::VerificationFailure, "witness identity broke");
  return out;
}

void require_gl(const Matrix& g, std::size_t n) {
  if (g.rows() != 2 * n || g.cols() != 2 * n)
    fail(ErrorKind::ShapeMismatch, "expected a " + std::to_string(2 * n) + "x" +
                                       std::to_string(2 * n) + " matrix");
  if (rank(g) != 2 * n) fail(ErrorKind::SingularMatrix, "g is not invertible");
}

}  // namespace

std::string_view to_string(RepCase c) {
  switch (c) {
    case RepCase::RhIdentity: return "RH_IDENTITY";
    case RepCase::H1: return "H1";
    case RepCase::H2: return "H2";
    case RepCase::H3: return "H3";
  }
  return "?";
}

RepCase parse_rep_case(std::string_view text) {
  if (text == "RH_IDENTITY") return RepCase::RhIdentity;
  if (text == "H1") return RepCase::H1;
  if (text == "H2") return RepCase::H2;
  if (text == "H3") return RepCase::H3;
  fail(ErrorKind::ParseError, "unknown representative case '" + std::string(text) + "'");
}

Representative make_representative(RepCase case_id, std::size_t n, std::optional<int> k) {
  const bool needs_k = case_id == RepCase::H1 || case_id == RepCase::H2;
  if (needs_k && (!k || (*k != 0 && *k != 1)))
    fail(ErrorKind::InvalidStructure, "H1/H2 need k in {0, 1}");
  if (!needs_k) k.reset();

  const std::size_t d = 2 * n;
  switch (case_id) {
    case RepCase::RhIdentity:
      if (n < 1) fail(ErrorKind::InvalidDimension, "RH needs n >= 1");
      return {Family::RH, case_id, k, Matrix::identity(d)};
    case RepCase::H1: {
      if (n <= 2) fail(ErrorKind::InvalidDimension, "H1 exists only for n > 2");
      Matrix m = Matrix::identity(d);
      m(1, n) = *k;
      return {Family::HEIS, case_id, k, std::move(m)};
    }
    case RepCase::H2:
    case RepCase::H3: {
      if (n < 2) fail(ErrorKind::InvalidDimension, "HEIS needs n >= 2");
      if (case_id == RepCase::H3 && n <= 2) fail(ErrorKind::InvalidDimension, "H3 exists only for n > 2");
      Matrix m = Matrix::block_diagonal(Matrix::identity(n), cyclic_shift_permutation(n));
      if (case_id == RepCase::H2) {
        m(1, n) = *k;
      } else {
        m(2, n) = 1;
      }
      return {Family::HEIS, case_id, k, std::move(m)};
    }
  }
  fail(ErrorKind::InvalidStructure, "unknown representative case");
}

std::vector<Representative> allowed_representatives(Family family, std::size_t n) {
  switch (family) {
    case Family::RH:
      return {make_representative(RepCase::RhIdentity, n)};
    case Family::HEIS:
      if (n < 2) fail(ErrorKind::InvalidDimension, "HEIS needs n >= 2");
      if (n == 2) return {make_representative(RepCase::H2, n, 0), make_representative(RepCase::H2, n, 1)};
      return {make_representative(RepCase::H1, n, 0), make_representative(RepCase::H1, n, 1),
              make_representative(RepCase::H2, n, 0), make_representative(RepCase::H2, n, 1),
              make_representative(RepCase::H3, n)};
    case Family::Generic:
      break;
  }
  fail(ErrorKind::UnsupportedFamily, "no representatives for generic algebras");
}

bool verify_witness(const LieAlgebra& g_alg, const Matrix& g, const ReductionWitness& w) {
  const std::size_t d = g_alg.dim();
  if (g.rows() != d || g.cols() != d || w.c_phi.rows() != d || w.S.rows() != d) return false;
  const SymplecticContext ctx(d / 2);
  if (!in_scaled_aut(g_alg, w.c_phi) || !is_symplectic(ctx, w.S)) return false;
  if (w.c.is_zero() || aut_scale(g_alg, w.c_phi) != w.c) return false;
  if (w.rep.family != g_alg.family()) return false;
  if (make_representative(w.rep.case_id, d / 2, w.rep.k).matrix != w.rep.matrix) return false;
  return w.c_phi * g * w.S == w.rep.matrix;
}

ReductionWitness reduce_rh(std::size_t n, const Matrix& g) {
  const LieAlgebra rh = build_family(Family::RH, n);
  require_gl(g, n);
  const SymplecticContext ctx(n);
  DoubleCosetWalk walk(g);
  walk.apply_right(symplectic_qr(ctx, g).S);
  // g S has first row e_1^T, so it and its inverse lie in the pattern.
  walk.apply_left(inverse(walk.current()));
  return finish(rh, g, walk, make_representative(RepCase::RhIdentity, n));
}

ReductionWitness reduce_heis(std::size_t n, const Matrix& g) {
  const LieAlgebra heis = build_family(Family::HEIS, n);
  require_gl(g, n);
  const SymplecticContext ctx(n);
  const Matrix id = Matrix::identity(n);
  const Matrix cycle = cyclic_shift_permutation(n);
  DoubleCosetWalk walk(g);

  // (I T; C *): symplectic QR.
  walk.apply_right(symplectic_qr(ctx, g).S);

  // (I *; 0 D): clear the lower-left block.
  walk.apply_left(Matrix::from_blocks(id, Matrix::zeros(n, n), -walk.current().block(n, 0, n, n), id));

  // (I *; 0 P'): LPU on D, then conjugate the permutation into {I, cycle}.
  {
    const LpuDecomposition lpu = lpu_decompose(walk.current().block(n, n, n, n));
    walk.apply_left(Matrix::block_diagonal(lpu.U.transpose(), lpu.L));
    walk.apply_right(Matrix::block_diagonal(inverse(lpu.U.transpose()), lpu.U));
  }
  const PermutationSplit split = permutation_split(walk.current().block(n, n, n, n), n);
  walk.apply_left(Matrix::block_diagonal(split.K1, split.K2));
  walk.apply_right(build_generator(ctx, GeneratorKind::Type3, split.K1.transpose()));
  clear_upper_right(walk, ctx);

  if (split.result == PermutationClass::Identity) {
    if (n == 2) {
      // Swap into the cyclic case and clean up again.
      const Matrix swap = cyclic_shift_permutation(2);
      walk.apply_left(Matrix::block_diagonal(swap, id));
      walk.apply_right(build_generator(ctx, GeneratorKind::Type3, swap));
      clear_upper_right(walk, ctx);
    } else {
      Matrix rest = walk.current().block(0, n, n, n);
      const Rational t21 = rest(1, 0);
      rest(1, 0) = 0;
      walk.apply_left(block_unipotent_upper(-rest));
      if (!t21.is_zero()) {
        Matrix v = id;
        v(1, 1) = t21.inverse();
        conjugate_by(walk, v, id);
      }
      return finish(heis, g, walk, make_representative(RepCase::H1, n, t21.is_zero() ? 0 : 1));
    }
  }

  // Cyclic case: (I T; 0 P) with T strictly lower triangular. Cancel the
  // trailing block of T so that only the first column x_2..x_n survives.
  {
    const Matrix t = walk.current().block(0, n, n, n);
    Matrix a(n, n);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) a(i, j - 1) = -t(i, j);
    walk.apply_left(block_unipotent_upper(a));
  }

  Vector x(n);
  for (std::size_t i = 1; i < n; ++i) x[i] = walk.current()(i, n);

  if (!x[1].is_zero()) {
    Matrix v = id;
    v(1, 1) = x[1].inverse();
    conjugate_by(walk, v, cycle);
    Matrix shear = id;
    for (std::size_t i = 2; i < n; ++i) shear(i, 1) = -walk.current()(i, n);
    conjugate_by(walk, shear, cycle);
    return finish(heis, g, walk, make_representative(RepCase::H2, n, 1));
  }

  const Vector tail(x.begin() + 2, x.end());
  if (tail.empty() || is_zero(tail)) {
    return finish(heis, g, walk, make_representative(RepCase::H2, n, 0));
  }
  Matrix h = id;
  h.set_block(2, 2, compress_to_first_axis(tail));
  conjugate_by(walk, h, cycle);
  return finish(heis, g, walk, make_representative(RepCase::H3, n));
}

ReductionWitness reduce(Family family, std::size_t n, const Matrix& g) {
  switch (family) {
    case Family::RH: return reduce_rh(n, g);
    case Family::HEIS: return reduce_heis(n, g);
    case Family::Generic: break;
  }
  fail(ErrorKind::UnsupportedFamily, "no reduction for generic algebras");
}

std::string profile_tag(const BracketProfile& p) {
  switch (p.kind) {
    case ProfileKind::RhDilation: return "RH";
    case ProfileKind::Heis1: return "HEIS-1-k" + std::to_string(p.k);
    case ProfileKind::Heis2: return "HEIS-2-k" + std::to_string(p.k);
    case ProfileKind::Heis3: return "HEIS-3";
  }
  return "?";
}

BracketProfile parse_profile_tag(std::string_view tag) {
  if (tag == "RH") return {ProfileKind::RhDilation, 0};
  if (tag == "HEIS-1-k0") return {ProfileKind::Heis1, 0};
  if (tag == "HEIS-1-k1") return {ProfileKind::Heis1, 1};
  if (tag == "HEIS-2-k0") return {ProfileKind::Heis2, 0};
  if (tag == "HEIS-2-k1") return {ProfileKind::Heis2, 1};
  if (tag == "HEIS-3") return {ProfileKind::Heis3, 0};
  fail(ErrorKind::ParseError, "unknown profile tag '" + std::string(tag) + "'");
}

BracketProfile profile_for(const Representative& rep) {
  switch (rep.case_id) {
    case RepCase::RhIdentity: return {ProfileKind::RhDilation, 0};
    case RepCase::H1: return {ProfileKind::Heis1, rep.k.value_or(0)};
    case RepCase::H2: return {ProfileKind::Heis2, rep.k.value_or(0)};
    case RepCase::H3: return {ProfileKind::Heis3, 0};
  }
  fail(ErrorKind::InvalidStructure, "unknown representative case");
}

LieAlgebra profile_algebra(const BracketProfile& p, std::size_t n) {
  const std::size_t d = 2 * n;
  const Rational k(p.k);
  std::vector<StructureConstant> cs;
  switch (p.kind) {
    case ProfileKind::RhDilation:
      for (std::size_t j = 1; j < d; ++j) cs.push_back({0, j, j, Rational(1)});
      return LieAlgebra(d, Family::Generic, std::move(cs));
    case ProfileKind::Heis1:
      cs = {{0, 1, d - 1, Rational(1)}, {0, n, d - 1, k}};
      break;
    case ProfileKind::Heis2:
      cs = {{0, 1, n, Rational(1)}, {0, 1, 1, -k}, {0, n, n, k}, {0, n, 1, -(k * k)}};
      break;
    case ProfileKind::Heis3:
      cs = {{0, 1, n, Rational(1)}, {0, 1, 2, Rational(-1)}};
      break;
  }
  return LieAlgebra(d, Family::Generic, std::move(cs));
}

BracketProfile canonical_closed_profile(Family family) {
  switch (family) {
    case Family::RH: return {ProfileKind::RhDilation, 0};
    case Family::HEIS: return {ProfileKind::Heis2, 0};
    case Family::Generic: break;
  }
  fail(ErrorKind::UnsupportedFamily, "no canonical profile for generic algebras");
}

bool verify_frame(const LieAlgebra& g, const TwoForm& w, const MilnorFrame& frame) {
  const std::size_t d = g.dim();
  if (w.dim() != d || frame.basis.rows() != d || frame.basis.cols() != d) return false;
  if (frame.t.sign() <= 0) return false;
  if (frame.t * (frame.basis.transpose() * w.matrix() * frame.basis) != standard_j(d / 2)) return false;
  const LieAlgebra expected = profile_algebra(frame.profile, d / 2);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector xi = frame.basis.column(i);
    for (std::size_t j = i + 1; j < d; ++j) {
      if (g.bracket(xi, frame.basis.column(j)) != frame.basis * expected.basis_bracket(i, j))
        return false;
    }
  }
  return true;
}

MilnorFrame milnor_frame(Family family, std::size_t n, const TwoForm& w) {
  const LieAlgebra g = build_family(family, n);
  if (w.dim() != 2 * n) fail(ErrorKind::ShapeMismatch, "form dimension does not match 2n");
  if (!is_nondegenerate(w)) fail(ErrorKind::DegenerateForm, "form is degenerate");

  const SymplecticContext ctx(n);
  const Matrix b0 = darboux_basis(ctx, w);
  const ReductionWitness wit = reduce(family, n, b0);

  // w = b0.w0 = (c phi)^-1 rep . w0, so x_i = phi^-1 rep e_i is symplectic
  // for w / c^2.
  MilnorFrame frame{(wit.c * wit.c).inverse(), wit.c * inverse(wit.c_phi) * wit.rep.matrix,
                    profile_for(wit.rep)};
  if (!verify_frame(g, w, frame)) fail(ErrorKind::VerificationFailure, "Milnor frame identity broke");
  return frame;
}

Verdict classify_symplectic(Family family, std::size_t n, const TwoForm& w) {
  const LieAlgebra g = build_family(family, n);
  if (w.dim() != 2 * n) fail(ErrorKind::ShapeMismatch, "form dimension does not match 2n");
  if (!is_nondegenerate(w)) fail(ErrorKind::DegenerateForm, "form is degenerate");

  if (auto bad = first_nonclosed_triple(g, w)) {
    const auto& [i, j, k] = bad->triple;
    const std::size_t dim = g.dim();
    if (d_omega(g, w, unit_vector(dim, i), unit_vector(dim, j), unit_vector(dim, k)) != bad->value)
      fail(ErrorKind::VerificationFailure, "non-closedness witness did not re-check");
    return NotClosed{*bad};
  }

  MilnorFrame frame = milnor_frame(family, n, w);
  if (frame.profile != canonical_closed_profile(family) || (family == Family::RH && n != 1)) {
    fail(ErrorKind::VerificationFailure, "closed form produced a non-canonical profile");
  }
  return Closed{std::move(frame)};
}

Subspace lagrangian_ideal(Family family, std::size_t n, const MilnorFrame& frame) {
  if (frame.profile != canonical_closed_profile(family))
    fail(ErrorKind::NotClosedProfile, "frame profile " + profile_tag(frame.profile) + " is not closed");
  if (frame.basis.rows() != 2 * n || frame.basis.cols() != 2 * n)
    fail(ErrorKind::ShapeMismatch, "frame size does not match 2n");

  std::vector<Vector> vectors;
  if (family == Family::RH) {
    if (n != 1) fail(ErrorKind::NotClosedProfile, "RH carries closed forms only for n = 1");
    vectors.push_back(frame.basis.column(1));
  } else {
    for (std::size_t i = 1; i <= n; ++i) vectors.push_back(frame.basis.column(i));
  }
  return Subspace(2 * n, std::move(vectors));
}

}  // namespace symlie
