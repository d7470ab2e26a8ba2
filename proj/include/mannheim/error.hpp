#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mannheim {

enum class ErrorCode {
  NullInput,
  OrientationMismatch,
  OutOfDomain,
  NonFinite,
  MixedCausalCharacter,
  NullTangent,
  NotUnitSpeed,
  DerivativeUnavailable,
  VanishingCurvature,
  NullPrincipalNormal,
  InvalidInitialFrame,
  NonPositiveCurvature,
  ZeroLambda,
  UnsupportedCombination,
  NegativeConditionValue,
  VanishingTorsion,
  InconsistentDecomposition,
  DegenerateIndicatrix,
  SyntaxError,
  DivisionByZero,
  InvalidArgument,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NullInput: return "NullInput";
    case ErrorCode::OrientationMismatch: return "OrientationMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::MixedCausalCharacter: return "MixedCausalCharacter";
    case ErrorCode::NullTangent: return "NullTangent";
    case ErrorCode::NotUnitSpeed: return "NotUnitSpeed";
    case ErrorCode::DerivativeUnavailable: return "DerivativeUnavailable";
    case ErrorCode::VanishingCurvature: return "VanishingCurvature";
    case ErrorCode::NullPrincipalNormal: return "NullPrincipalNormal";
    case ErrorCode::InvalidInitialFrame: return "InvalidInitialFrame";
    case ErrorCode::NonPositiveCurvature: return "NonPositiveCurvature";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::NegativeConditionValue: return "NegativeConditionValue";
    case ErrorCode::VanishingTorsion: return "VanishingTorsion";
    case ErrorCode::InconsistentDecomposition: return "InconsistentDecomposition";
    case ErrorCode::DegenerateIndicatrix: return "DegenerateIndicatrix";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library. `value()` carries the offending
/// measurement when there is one (e.g. the Pythagorean defect of an
/// inconsistent angle decomposition), `offset()` the byte position of a
/// syntax error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        double value = std::numeric_limits<double>::quiet_NaN(),
        std::size_t offset = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        value_(value),
        offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  double value() const noexcept { return value_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  double value_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what,
                              double value = std::numeric_limits<double>::quiet_NaN()) {
  throw Error(code, what, value);
}

}  // namespace mannheim
