#include "towercalc/integer.hpp"

namespace towercalc {

BigInt factorial(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "factorial of negative integer");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt ipow(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw Error(ErrorCode::OutOfRange, "negative exponent");
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvariantViolation: return "INVARIANT_VIOLATION";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::NotInjective: return "NOT_INJECTIVE";
    case ErrorCode::InvalidSectioning: return "INVALID_SECTIONING";
    case ErrorCode::NotOrientableOrDisconnected: return "NOT_ORIENTABLE_OR_DISCONNECTED";
    case ErrorCode::ParityUnsupported: return "PARITY_UNSUPPORTED";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::NotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::ArithmeticOverflow: return "ARITHMETIC_OVERFLOW";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace towercalc
