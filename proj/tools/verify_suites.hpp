#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symlie/json_io.hpp"
#include "symlie/lie_algebra.hpp"

namespace symlie::cli {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<json::Json> first_counterexample;
};

/// Randomized property suites for one family and size: symplectic QR,
/// reduction witnesses, Milnor frames and the closed-form classification.
std::vector<SuiteResult> run_verification(Family family, std::size_t n, std::size_t trials,
                                          std::uint64_t seed);

}  // namespace symlie::cli
