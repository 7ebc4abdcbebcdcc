#include "symlie/json_io.hpp"

#include <set>
#include <string>
#include <utility>

#include "symlie/errors.hpp"

namespace symlie::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(ErrorKind::ParseError, std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    fail(ErrorKind::ParseError, std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::size_t index_1based(const Json& v, std::size_t dim) {
  if (!v.is_number_integer()) fail(ErrorKind::ParseError, "index must be an integer");
  const long long i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim)
    fail(ErrorKind::ShapeMismatch, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) fail(ErrorKind::ParseError, std::string("field '") + key + "' must be an array");
  return v;
}

}  // namespace

Json encode(const Rational& r) { return r.str(); }

Rational decode_rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail(ErrorKind::ParseError, "rational must be a \"p/q\" string or an integer");
}

Json encode(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Vector decode_vector(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(decode_rational(x));
  return v;
}

Json encode(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(encode(m.row(i)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix decode_matrix(const Json& j) {
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  const Json& entries = array_field(j, "entries");
  if (entries.size() != rows) fail(ErrorKind::ShapeMismatch, "entries has wrong row count");
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (const auto& r : entries) {
    Vector row = decode_vector(r);
    if (row.size() != cols) fail(ErrorKind::ShapeMismatch, "ragged matrix row");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(rows, cols, std::move(data));
}

Json encode(const TwoForm& w) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = i + 1; j < w.dim(); ++j)
      if (!w.matrix()(i, j).is_zero()) entries.push_back(Json{i + 1, j + 1, encode(w.matrix()(i, j))});
  return Json{{"dim", w.dim()}, {"entries", std::move(entries)}};
}

TwoForm decode_form(const Json& j) {
  const std::size_t dim = count_field(j, "dim");
  Matrix m(dim, dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : array_field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) fail(ErrorKind::ParseError, "form entry must be [i, j, value]");
    const std::size_t a = index_1based(e[0], dim);
    const std::size_t b = index_1based(e[1], dim);
    if (a >= b) fail(ErrorKind::ParseError, "form entries must have i < j");
    if (!seen.emplace(a, b).second) fail(ErrorKind::ParseError, "duplicate form entry");
    const Rational v = decode_rational(e[2]);
    m(a, b) = v;
    m(b, a) = -v;
  }
  return TwoForm(std::move(m));
}

Json encode(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (const auto& c : g.constants()) brackets.push_back(Json{c.i + 1, c.j + 1, c.k + 1, encode(c.value)});
  return Json{{"dim", g.dim()}, {"family", std::string(to_string(g.family()))}, {"brackets", std::move(brackets)}};
}

LieAlgebra decode_algebra(const Json& j) {
  const std::size_t dim = count_field(j, "dim");
  const Json& fam = field(j, "family");
  if (!fam.is_string()) fail(ErrorKind::ParseError, "family must be a string");
  std::vector<StructureConstant> cs;
  for (const auto& e : array_field(j, "brackets")) {
    if (!e.is_array() || e.size() != 4) fail(ErrorKind::ParseError, "bracket entry must be [i, j, k, value]");
    cs.push_back({index_1based(e[0], dim), index_1based(e[1], dim), index_1based(e[2], dim),
                  decode_rational(e[3])});
  }
  return LieAlgebra(dim, parse_family(fam.get<std::string>()), std::move(cs));
}

Json encode(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(encode(v));
  return Json{{"dim", s.ambient_dim()}, {"basis", std::move(basis)}};
}

Subspace decode_subspace(const Json& j) {
  const std::size_t dim = count_field(j, "dim");
  std::vector<Vector> basis;
  for (const auto& v : array_field(j, "basis")) basis.push_back(decode_vector(v));
  return Subspace(dim, std::move(basis));
}

Json encode(const SymplecticQR& qr) {
  return Json{{"S", encode(qr.S)}, {"T", encode(qr.T)}, {"product", encode(qr.product)}, {"verified", true}};
}

Json encode(const Representative& rep) {
  Json out{{"family", std::string(to_string(rep.family))}, {"case", std::string(to_string(rep.case_id))}};
  if (rep.k) out["k"] = *rep.k;
  return out;
}

Json encode(const ReductionWitness& w) {
  return Json{{"rep", encode(w.rep)}, {"c_phi", encode(w.c_phi)}, {"S", encode(w.S)}, {"verified", true}};
}

Json encode(const MilnorFrame& f) {
  return Json{{"t", encode(f.t)}, {"basis", encode(f.basis)}, {"profile", profile_tag(f.profile)}};
}

MilnorFrame decode_frame(const Json& j) {
  const Json& tag = field(j, "profile");
  if (!tag.is_string()) fail(ErrorKind::ParseError, "profile must be a string");
  return MilnorFrame{decode_rational(field(j, "t")), decode_matrix(field(j, "basis")),
                     parse_profile_tag(tag.get<std::string>())};
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

}  // namespace symlie::json
