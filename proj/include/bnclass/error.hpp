#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bnclass {

enum class ErrorCode {
  InvalidInput,
  RhoNotMinusOne,
  GenusTooSmall,
  ContextMismatch,
  SingularSystem,
  ZeroDenominator,
  MissingParameter,
  Unsupported,
  InvariantViolation,
  SchemaMismatch,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bnclass
