#include "verify_suites.hpp"

#include <algorithm>
#include <functional>

#include "sampling.hpp"
#include "symlie/errors.hpp"
#include "symlie/forms.hpp"
#include "symlie/linalg.hpp"
#include "symlie/moduli.hpp"
#include "symlie/subspace.hpp"
#include "symlie/symplectic.hpp"

namespace symlie::cli {

namespace {

// A trial returns nullopt on success, or the counterexample payload.
using Trial = std::function<std::optional<json::Json>(Sampler&)>;

SuiteResult run_suite(const std::string& name, std::uint64_t stream, std::size_t trials,
                      std::uint64_t seed, const Trial& trial) {
  SuiteResult result{name, 0, 0, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    Sampler sampler(derive_seed(seed, stream, t));
    std::optional<json::Json> bad;
    try {
      bad = trial(sampler);
    } catch (const Error& e) {
      bad = json::Json{{"trial", t}, {"error", e.what()}};
    }
    if (bad) {
      ++result.failed;
      if (!result.first_counterexample) result.first_counterexample = std::move(bad);
    } else {
      ++result.passed;
    }
  }
  return result;
}

json::Json counterexample(const char* what, const json::Json& input) {
  return json::Json{{"reason", what}, {"input", input}};
}

bool rep_allowed(Family family, std::size_t n, const Representative& rep) {
  const auto allowed = allowed_representatives(family, n);
  return std::find(allowed.begin(), allowed.end(), rep) != allowed.end();
}

}  // namespace

std::vector<SuiteResult> run_verification(Family family, std::size_t n, std::size_t trials,
                                          std::uint64_t seed) {
  const LieAlgebra g = build_family(family, n);
  const SymplecticContext ctx(n);
  const std::size_t dim = 2 * n;
  std::vector<SuiteResult> out;

  out.push_back(run_suite("symplectic_qr", 1, trials, seed, [&](Sampler& s) -> std::optional<json::Json> {
    const Matrix m = s.invertible(dim);
    const SymplecticQR qr = symplectic_qr(ctx, m);
    const Matrix prod = m * qr.S;
    if (!is_symplectic(ctx, qr.S) || prod != qr.product ||
        prod.block(0, 0, n, n) != Matrix::identity(n) || prod.block(0, n, n, n) != qr.T ||
        !is_strictly_lower_triangular(qr.T)) {
      return counterexample("QR contract", json::encode(m));
    }
    return std::nullopt;
  }));

  out.push_back(run_suite("reduction", 2, trials, seed, [&](Sampler& s) -> std::optional<json::Json> {
    const Matrix m = s.invertible(dim);
    const ReductionWitness w = reduce(family, n, m);
    if (!verify_witness(g, m, w)) return counterexample("witness identity", json::encode(m));
    if (!rep_allowed(family, n, w.rep)) return counterexample("representative outside the set", json::encode(m));
    return std::nullopt;
  }));

  out.push_back(run_suite("milnor_frame", 3, trials, seed, [&](Sampler& s) -> std::optional<json::Json> {
    const TwoForm w = s.nondegenerate_form(dim);
    const MilnorFrame f = milnor_frame(family, n, w);
    if (!verify_frame(g, w, f)) return counterexample("frame identity", json::encode(w));
    bool known = false;
    for (const auto& rep : allowed_representatives(family, n)) known |= profile_for(rep) == f.profile;
    if (!known) return counterexample("unexpected profile", json::encode(w));
    return std::nullopt;
  }));

  if (family == Family::RH) {
    out.push_back(run_suite("closed_forms", 4, trials, seed, [&](Sampler& s) -> std::optional<json::Json> {
      const auto basis = cocycle_space(g);
      if (basis.size() != dim - 1) return counterexample("cocycle dimension", json::encode(g));
      Matrix combo(dim, dim);
      for (const auto& b : basis) combo += Rational(s.small_integer(-5, 5)) * b.matrix();
      if (n == 1) {
        if (!is_closed(g, ctx.omega0())) return counterexample("w0 not closed", json::encode(g));
        const TwoForm w = s.nondegenerate_form(dim);
        if (!std::holds_alternative<Closed>(classify_symplectic(family, n, w)))
          return counterexample("n = 1 form not closed", json::encode(w));
      } else if (rank(combo) > 2) {
        return counterexample("closed form of rank > 2", json::encode(TwoForm(combo)));
      }
      return std::nullopt;
    }));
  } else {
    out.push_back(run_suite("closed_forms", 4, trials, seed, [&](Sampler& s) -> std::optional<json::Json> {
      const TwoForm w = s.closed_nondegenerate_form(g);
      const Verdict v = classify_symplectic(family, n, w);
      const auto* closed = std::get_if<Closed>(&v);
      if (!closed) return counterexample("sampled closed form rejected", json::encode(w));
      if (closed->frame.profile != canonical_closed_profile(family) || closed->frame.t.sign() <= 0 ||
          !verify_frame(g, w, closed->frame))
        return counterexample("non-canonical frame", json::encode(w));
      const SubspaceFlags flags = predicates(g, w, lagrangian_ideal(family, n, closed->frame));
      if (!(flags.is_isotropic && flags.is_lagrangian && flags.is_subalgebra && flags.is_ideal))
        return counterexample("Lagrangian ideal predicates", json::encode(w));
      return std::nullopt;
    }));
  }
  return out;
}

}  // namespace symlie::cli
