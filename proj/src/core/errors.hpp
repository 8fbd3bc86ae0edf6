#pragma once

#include <stdexcept>
#include <string>

namespace orbitline {

enum class ErrorCode {
  ParseError,
  ValidationError,
  DegreeTooLow,
  DegreeMismatch,
  DegreeSumTooLow,
  NotInvertible,
  PreconditionViolated,
  MonomialEquivalentInput,
  BudgetExceeded,
  InsufficientSupport,
  BadIndex,
  HypothesisViolated,
  InvalidArgument,
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code);

// Thrown for contract violations (bad inputs, violated preconditions).
// Searches that simply fail to find something return value-level outcomes,
// never throw.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace orbitline
