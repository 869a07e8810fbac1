#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bmssp {

enum class ErrorCode {
  NegativeWeight,
  BadVertexId,
  Unreached,
  BadCapacity,
  ValueAboveBound,
  OrderViolation,
  NotSingleton,
  FrontierTooLarge,
  ParseError,
  CountMismatch,
  BadSpec,
  InvariantViolation,
  Io,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bmssp
