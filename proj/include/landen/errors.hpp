#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace landen {

enum class ErrorCode {
  kInvalidOrder,
  kOddDegree,
  kDegreeGap,
  kRealPole,
  kZeroTrailingCoeff,
  kNonZeroRemainder,
  kResourceLimit,
  kArityMismatch,
  kFormatError,
  kVersionMismatch,
  kZeroTrailing,
  kDivergenceSuspected,
  kInsufficientData,
  kPrecisionExhausted,
  kNoConvergence,
  kParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kOddDegree: return "OddDegree";
    case ErrorCode::kDegreeGap: return "DegreeGap";
    case ErrorCode::kRealPole: return "RealPole";
    case ErrorCode::kZeroTrailingCoeff: return "ZeroTrailingCoeff";
    case ErrorCode::kNonZeroRemainder: return "NonZeroRemainder";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kZeroTrailing: return "ZeroTrailing";
    case ErrorCode::kDivergenceSuspected: return "DivergenceSuspected";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kPrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace landen
