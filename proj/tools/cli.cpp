#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "symlie/errors.hpp"
#include "symlie/forms.hpp"
#include "symlie/json_io.hpp"
#include "symlie/moduli.hpp"
#include "symlie/subspace.hpp"
#include "symlie/symplectic.hpp"
#include "verify_suites.hpp"

namespace symlie::cli {

namespace {

using json::Json;

constexpr std::size_t kDefaultTrials = 20;

Json read_input(const CommandRequest& req, std::istream& in) {
  std::string text;
  if (req.input_path) {
    std::ifstream file(*req.input_path);
    if (!file) fail(ErrorKind::ParseError, "cannot open input file " + *req.input_path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return json::parse(text);
}

Family need_family(const CommandRequest& req) {
  if (!req.family) fail(ErrorKind::ParseError, req.command + " requires --family");
  return *req.family;
}

std::size_t need_n(const CommandRequest& req) {
  if (!req.n) fail(ErrorKind::ParseError, req.command + " requires --n");
  return *req.n;
}

void require_shape(std::size_t rows, std::size_t cols, std::size_t n) {
  if (rows != 2 * n || cols != 2 * n)
    fail(ErrorKind::ShapeMismatch, "expected a " + std::to_string(2 * n) + "x" + std::to_string(2 * n) + " input");
}

TwoForm form_for(const Json& input, std::size_t n) {
  TwoForm w = json::decode_form(input);
  require_shape(w.dim(), w.dim(), n);
  return w;
}

Json decompose(const CommandRequest& req, std::istream& in) {
  const Matrix m = json::decode_matrix(read_input(req, in));
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
    fail(ErrorKind::ShapeMismatch, "decompose expects a nonempty square matrix of even size");
  const std::size_t n = req.n.value_or(m.rows() / 2);
  require_shape(m.rows(), m.cols(), n);
  return json::encode(symplectic_qr(SymplecticContext(n), m));
}

Json reduce_cmd(const CommandRequest& req, std::istream& in) {
  const Family family = need_family(req);
  const std::size_t n = need_n(req);
  const LieAlgebra g_alg = build_family(family, n);
  const Matrix g = json::decode_matrix(read_input(req, in));
  require_shape(g.rows(), g.cols(), n);
  const ReductionWitness w = reduce(family, n, g);
  if (!verify_witness(g_alg, g, w)) fail(ErrorKind::VerificationFailure, "reduction witness failed re-verification");
  return json::encode(w);
}

Json classify(const CommandRequest& req, std::istream& in) {
  const Family family = need_family(req);
  const std::size_t n = need_n(req);
  const LieAlgebra g = build_family(family, n);
  const TwoForm w = form_for(read_input(req, in), n);
  const Verdict v = classify_symplectic(family, n, w);
  if (const auto* nc = std::get_if<NotClosed>(&v)) {
    const auto& t = nc->witness.triple;
    return Json{{"verdict", "not_closed"},
                {"triple", Json::array({t[0] + 1, t[1] + 1, t[2] + 1})},
                {"value", nc->witness.value.str()}};
  }
  const MilnorFrame& frame = std::get<Closed>(v).frame;
  if (!verify_frame(g, w, frame)) fail(ErrorKind::VerificationFailure, "Milnor frame failed re-verification");
  return Json{{"verdict", "closed"}, {"profile", profile_tag(frame.profile)}, {"frame", json::encode(frame)}};
}

Json cocycles(const CommandRequest& req, std::istream& in) {
  LieAlgebra g = (req.family || req.n) ? build_family(need_family(req), need_n(req))
                                       : json::decode_algebra(read_input(req, in));
  const auto basis = cocycle_space(g);
  Json list = Json::array();
  for (const auto& b : basis) list.push_back(json::encode(b));
  return Json{{"dimension", basis.size()}, {"basis", std::move(list)}};
}

Json milnor(const CommandRequest& req, std::istream& in) {
  const Family family = need_family(req);
  const std::size_t n = need_n(req);
  const LieAlgebra g = build_family(family, n);
  const TwoForm w = form_for(read_input(req, in), n);
  const MilnorFrame frame = milnor_frame(family, n, w);
  if (!verify_frame(g, w, frame)) fail(ErrorKind::VerificationFailure, "Milnor frame failed re-verification");
  return json::encode(frame);
}

Json lagrangian(const CommandRequest& req, std::istream& in) {
  const Family family = need_family(req);
  const std::size_t n = need_n(req);
  const LieAlgebra g = build_family(family, n);
  const TwoForm w = form_for(read_input(req, in), n);
  const Verdict v = classify_symplectic(family, n, w);
  const auto* closed = std::get_if<Closed>(&v);
  if (!closed) fail(ErrorKind::NotClosedProfile, "the form is not closed, so it carries no Lagrangian ideal");
  const Subspace W = lagrangian_ideal(family, n, closed->frame);
  const SubspaceFlags f = predicates(g, w, W);
  return Json{{"subspace", json::encode(W)},
              {"is_subalgebra", f.is_subalgebra},
              {"is_ideal", f.is_ideal},
              {"is_isotropic", f.is_isotropic},
              {"is_lagrangian", f.is_lagrangian}};
}

Json verify(const CommandRequest& req, bool& all_passed) {
  const Family family = need_family(req);
  const std::size_t n = need_n(req);
  const auto results = run_verification(family, n, req.trials.value_or(kDefaultTrials), req.seed);
  Json suites = Json::array();
  all_passed = true;
  for (const auto& r : results) {
    Json s{{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed}};
    if (r.first_counterexample) s["first_counterexample"] = *r.first_counterexample;
    all_passed = all_passed && r.failed == 0;
    suites.push_back(std::move(s));
  }
  return Json{{"family", std::string(to_string(family))}, {"n", n}, {"seed", req.seed},
              {"suites", std::move(suites)}, {"passed", all_passed}};
}

int exit_code(ErrorKind kind) {
  switch (classify(kind)) {
    case ErrorClass::BadInput: return kExitBadInput;
    case ErrorClass::Precondition: return kExitPrecondition;
    case ErrorClass::Internal: return kExitInternal;
  }
  return kExitInternal;
}

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_command(const CommandRequest& req, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    Json report;
    int status = kExitOk;
    if (req.command == "decompose") {
      report = decompose(req, in);
    } else if (req.command == "reduce") {
      report = reduce_cmd(req, in);
    } else if (req.command == "classify") {
      report = classify(req, in);
    } else if (req.command == "cocycles") {
      report = cocycles(req, in);
    } else if (req.command == "milnor-frame") {
      report = milnor(req, in);
    } else if (req.command == "lagrangian") {
      report = lagrangian(req, in);
    } else if (req.command == "verify") {
      bool ok = false;
      report = verify(req, ok);
      if (!ok) status = kExitInternal;
    } else {
      fail(ErrorKind::ParseError, "unknown command '" + req.command + "'");
    }
    out << report.dump(2) << '\n';
    return status;
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kExitInternal;
  }
}

}  // namespace symlie::cli
