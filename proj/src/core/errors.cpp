#include "errors.hpp"

namespace orbitline {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegreeSumTooLow: return "DegreeSumTooLow";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MonomialEquivalentInput: return "MonomialEquivalentInput";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InsufficientSupport: return "InsufficientSupport";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace orbitline
