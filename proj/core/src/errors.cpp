#include "symlie/errors.hpp"

namespace symlie {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NotClosedProfile: return "NotClosedProfile";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

ErrorClass classify(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::NotSkew:
    case ErrorKind::InvalidStructure:
      return ErrorClass::BadInput;
    case ErrorKind::VerificationFailure:
      return ErrorClass::Internal;
    default:
      return ErrorClass::Precondition;
  }
}

}  // namespace symlie
