#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "symlie/lie_algebra.hpp"

namespace symlie::cli {

struct CommandRequest {
  std::string command;
  std::optional<Family> family;
  std::optional<std::size_t> n;
  std::optional<std::string> input_path;
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInternal = 4;

/// Runs one subcommand. Input JSON is read from req.input_path when set and
/// from `in` otherwise; the report goes to `out`, errors to `err` as
/// {"error": kind, "message": text}.
int run_command(const CommandRequest& req, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace symlie::cli
