#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace towercalc {

enum class ErrorCode {
  InvariantViolation,
  ShapeMismatch,
  NotInjective,
  InvalidSectioning,
  NotOrientableOrDisconnected,
  ParityUnsupported,
  OutOfRange,
  NotApplicable,
  ArithmeticOverflow,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Typed domain error. The CLI prints `error_name(code())` followed by the
/// message, and the message names the offending field.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace towercalc
