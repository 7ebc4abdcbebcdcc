#pragma once

#include <nlohmann/json.hpp>

#include "symlie/lie_algebra.hpp"
#include "symlie/matrix.hpp"
#include "symlie/moduli.hpp"
#include "symlie/subspace.hpp"
#include "symlie/symplectic.hpp"
#include "symlie/two_form.hpp"

// JSON encodings. Rationals are strings "p" or "p/q"; all indices are 1-based.
//   matrix:   {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
//   form:     {"dim": 2n, "entries": [[i, j, "p/q"], ...]}  (i < j, nonzero only)
//   algebra:  {"dim": d, "family": "RH"|"HEIS"|"GENERIC", "brackets": [[i, j, k, "p/q"], ...]}
//   subspace: {"dim": d, "basis": [["p/q", ...], ...]}
//   witness:  {"rep": {"family", "case", "k"?}, "c_phi": matrix, "S": matrix, "verified": true}
//   frame:    {"t": "p/q", "basis": matrix, "profile": tag}
// Parsers throw Error(ParseError | ShapeMismatch | NotSkew | InvalidStructure).

namespace symlie::json {

using Json = nlohmann::ordered_json;

Json encode(const Rational& r);
Rational decode_rational(const Json& j);

Json encode(const Vector& v);
Vector decode_vector(const Json& j);

Json encode(const Matrix& m);
Matrix decode_matrix(const Json& j);

Json encode(const TwoForm& w);
TwoForm decode_form(const Json& j);

Json encode(const LieAlgebra& g);
LieAlgebra decode_algebra(const Json& j);

Json encode(const Subspace& s);
Subspace decode_subspace(const Json& j);

Json encode(const SymplecticQR& qr);
Json encode(const Representative& rep);
Json encode(const ReductionWitness& w);
Json encode(const MilnorFrame& f);
MilnorFrame decode_frame(const Json& j);

/// Parses text, mapping syntax errors to Error(ParseError).
Json parse(std::string_view text);

}  // namespace symlie::json
