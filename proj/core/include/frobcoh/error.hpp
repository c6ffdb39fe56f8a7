#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobcoh {

enum class ErrorCode {
  ParseError,
  FieldMismatch,
  DivisionByZero,
  ArityMismatch,
  DimensionMismatch,
  InvalidArgument,
  NotAssociative,
  UnitLawFails,
  DegeneratePairing,
  NotAGroup,
  ZeroParameter,
  DegreeMismatch,
  NotSymmetric,
  NotCommutative,
  NoScalarHandle,
  NoSolutionInField,
  SingularCoefficient,
  NotProportionalToIdentity,
  DuplicateMulLine,
  UnknownBasisName,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code);

/// True for codes that report a failed mathematical hypothesis or check on
/// a well-formed input (as opposed to malformed input or misuse).
bool is_mathematical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frobcoh
