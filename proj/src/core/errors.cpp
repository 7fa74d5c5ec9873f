#include "rinvex/errors.hpp"

namespace rinvex {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::BasePointMismatch: return "BasePointMismatch";
    case ErrorCode::ZeroGradient: return "ZeroGradient";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownProblem: return "UnknownProblem";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace rinvex
