#pragma once

#include <stdexcept>
#include <string>

namespace exotica {

enum class ErrorCode {
  kInvalidArgument,    // generic precondition violation
  kDivisionByZero,
  kNegativeExponent,
  kZeroPolynomial,     // operation undefined on 0 (degree, radical, ...)
  kNotUnivariate,
  kUnknownVariable,
  kSumNonzero,         // a + b + c != 0
  kCommonFactor,       // gcd hypothesis violated
  kAllConstant,
  kZeroDifference,     // x^k - y^l == 0
  kDegreeGap,          // deg z >= max(k deg x, l deg y)
  kShapeMismatch,
  kNotNilpotent,
  kSearchSpaceTooLarge,
  kInternal,           // an exact cross-check failed: arithmetic bug
};

const char* to_string(ErrorCode code) noexcept;

/// Error raised by every exotica operation. The code distinguishes
/// hypothesis violations so callers (and the CLI) can report them precisely.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace exotica
