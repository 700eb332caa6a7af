#pragma once

#include <stdexcept>
#include <string>

namespace scarf {

enum class ErrorCode {
  InvalidArgument,
  DomainError,
  DegreeMismatch,
  InexactDivision,
  DivisionByZero,
  NonNormalizable,
  ConvergenceFailure,
  ParseError,
};

const char* error_code_name(ErrorCode code) noexcept;

// Single exception type; the code lets the C layer map failures to status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scarf
