#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symlie {

enum class ErrorKind {
  ParseError,
  ShapeMismatch,
  NotSkew,
  InvalidStructure,
  SingularMatrix,
  NotSymmetric,
  NotPermutation,
  DegenerateForm,
  InvalidDimension,
  UnsupportedFamily,
  NotClosedProfile,
  VerificationFailure,
};

std::string_view to_string(ErrorKind kind);

/// Broad grouping used to pick process exit codes.
enum class ErrorClass { BadInput, Precondition, Internal };

ErrorClass classify(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace symlie
