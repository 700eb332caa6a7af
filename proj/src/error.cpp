#include "scarf/error.hpp"

namespace scarf {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonNormalizable: return "NonNormalizable";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace scarf
