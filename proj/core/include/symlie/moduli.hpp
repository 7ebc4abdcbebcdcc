#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symlie/forms.hpp"
#include "symlie/lie_algebra.hpp"
#include "symlie/matrix.hpp"
#include "symlie/subspace.hpp"
#include "symlie/two_form.hpp"

namespace symlie {

/// Representative families of the double cosets R^x Aut(g) \ GL(2n) / Sp(2n).
///   RhIdentity: I_2n
///   H1(k):      I_2n + k E_{2,n+1}                      (n > 2)
///   H2(k):      diag(I_n, P) + k E_{2,n+1}
///   H3:         diag(I_n, P) + E_{3,n+1}                (n > 2)
/// with P = cyclic_shift_permutation(n) and k in {0, 1}.
enum class RepCase { RhIdentity, H1, H2, H3 };

std::string_view to_string(RepCase c);
RepCase parse_rep_case(std::string_view text);

struct Representative {
  Family family;
  RepCase case_id;
  std::optional<int> k;  // present for H1 and H2
  Matrix matrix;

  friend bool operator==(const Representative&, const Representative&) = default;
};

/// Throws InvalidDimension when the case does not exist for this n.
Representative make_representative(RepCase case_id, std::size_t n, std::optional<int> k = {});

/// The representatives a reduction may produce for the family at this n.
std::vector<Representative> allowed_representatives(Family family, std::size_t n);

/// (c phi) g S == rep.matrix, with c phi in the scaled automorphism pattern and
/// S symplectic. `c` is the scale recovered from c_phi.
struct ReductionWitness {
  Rational c;
  Matrix c_phi;
  Matrix S;
  Representative rep;
};

/// Re-checks every witness identity against the input g.
bool verify_witness(const LieAlgebra& g_alg, const Matrix& g, const ReductionWitness& w);

/// Every g reduces to I_2n (transitivity).
ReductionWitness reduce_rh(std::size_t n, const Matrix& g);

/// Reduces g to one of allowed_representatives(HEIS, n); n >= 2.
ReductionWitness reduce_heis(std::size_t n, const Matrix& g);

ReductionWitness reduce(Family family, std::size_t n, const Matrix& g);

/// Bracket relations of a Milnor frame.
///   RhDilation: [x1, xk] = xk, k = 2..2n
///   Heis1(k):   [x1, x2] = x_2n, [x1, x_{n+1}] = k x_2n
///   Heis2(k):   [x1, x2] = x_{n+1} - k x2, [x1, x_{n+1}] = k x_{n+1} - k^2 x2
///   Heis3:      [x1, x2] = x_{n+1} - x3
enum class ProfileKind { RhDilation, Heis1, Heis2, Heis3 };

struct BracketProfile {
  ProfileKind kind;
  int k = 0;

  friend bool operator==(const BracketProfile&, const BracketProfile&) = default;
};

std::string profile_tag(const BracketProfile& p);
BracketProfile parse_profile_tag(std::string_view tag);
BracketProfile profile_for(const Representative& rep);

/// The profile relations as a Lie algebra on the frame coordinates.
LieAlgebra profile_algebra(const BracketProfile& p, std::size_t n);

/// The closed profile for the family: RhDilation (n = 1 only) or Heis2 with k = 0.
BracketProfile canonical_closed_profile(Family family);

/// Columns x_1..x_2n of `basis` are a symplectic basis for t*w and satisfy
/// the brackets of `profile`.
struct MilnorFrame {
  Rational t;
  Matrix basis;
  BracketProfile profile;
};

bool verify_frame(const LieAlgebra& g, const TwoForm& w, const MilnorFrame& frame);

/// Throws DegenerateForm for degenerate w.
MilnorFrame milnor_frame(Family family, std::size_t n, const TwoForm& w);

struct Closed {
  MilnorFrame frame;
};
struct NotClosed {
  NonClosedWitness witness;
};
using Verdict = std::variant<Closed, NotClosed>;

Verdict classify_symplectic(Family family, std::size_t n, const TwoForm& w);

/// HEIS: span{x2, ..., x_{n+1}}; RH (n = 1): span{x2}. Throws
/// NotClosedProfile unless the frame carries the canonical closed profile.
Subspace lagrangian_ideal(Family family, std::size_t n, const MilnorFrame& frame);

}  // namespace symlie
