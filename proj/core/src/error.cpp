#include "celent/error.hpp"

namespace celent {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNonPositiveKappa: return "NonPositiveKappa";
    case ErrorCode::kNonPositiveGamma: return "NonPositiveGamma";
    case ErrorCode::kNegativeOmega: return "NegativeOmega";
    case ErrorCode::kNegativeTheta: return "NegativeTheta";
    case ErrorCode::kNonPositiveGain: return "NonPositiveGain";
    case ErrorCode::kNonFiniteInput: return "NonFiniteInput";
    case ErrorCode::kUnstableSystem: return "UnstableSystem";
    case ErrorCode::kNegativeTime: return "NegativeTime";
    case ErrorCode::kInconsistentMoments: return "InconsistentMoments";
    case ErrorCode::kUnphysicalCovariance: return "UnphysicalCovariance";
    case ErrorCode::kNonPositiveEigenvalue: return "NonPositiveEigenvalue";
    case ErrorCode::kStepTooLarge: return "StepTooLarge";
    case ErrorCode::kUnknownPreset: return "UnknownPreset";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIoFailure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace celent
