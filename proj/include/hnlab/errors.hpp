#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hnlab {

enum class ErrorCode {
  EmptyInput,
  NonCofinite,
  NotMember,
  UnsupportedMultiplicity,
  NotImplementedRange,
  BadMultiplicity,
  InconsistentRecord,
  NotInCatalogue,
  DimensionMismatch,
  InvariantViolation,
  InvalidArgument,
  LimitExceeded,
  Overflow,
  ParseError,
  /// A computed result disagrees with the expected one.
  VerificationMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// front ends can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hnlab
