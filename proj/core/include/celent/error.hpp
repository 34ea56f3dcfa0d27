#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace celent {

/// Named failure conditions. Each maps to a stable token (see to_string)
/// that the command-line front end prints verbatim.
enum class ErrorCode {
  kNonPositiveKappa,
  kNonPositiveGamma,
  kNegativeOmega,
  kNegativeTheta,
  kNonPositiveGain,
  kNonFiniteInput,
  kUnstableSystem,
  kNegativeTime,
  kInconsistentMoments,
  kUnphysicalCovariance,
  kNonPositiveEigenvalue,
  kStepTooLarge,
  kUnknownPreset,
  kInvalidConfig,
  kIoFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace celent
