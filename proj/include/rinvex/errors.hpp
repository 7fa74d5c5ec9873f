#pragma once

#include <stdexcept>
#include <string>

namespace rinvex {

enum class ErrorCode {
  DomainViolation = 1,
  BasePointMismatch,
  ZeroGradient,
  NoRoot,
  InvalidArgument,
  UnknownProblem,
  SchemaError,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rinvex
