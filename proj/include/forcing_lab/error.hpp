#pragma once

#include <stdexcept>
#include <string>

namespace forcing_lab {

enum class ErrorCode {
  DepthExceeded,
  OrderMismatch,
  NotANode,
  InvalidK,
  InvalidArgument,
  AdditivityViolation,
  ConsistencyViolation,
  BudgetExhausted,
  FrozenViolation,
  EngineBug,
  RegistrationRejected,
  SubsetBoundExceeded,
  ParseError,
  IoError,
};

const char* error_name(ErrorCode code);

/// Domain error carrying a stable code; the CLI prints the code name and
/// exits 1 on any of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace forcing_lab
