#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pf {

enum class ErrorCode {
  DuplicateElement,
  UnknownElement,
  CycleDetected,
  ParseError,
  MismatchedParent,
  NotConnected,
  Singleton,
  TooLarge,
  DegreeOutOfRange,
  MissingValue,
  NotACocycle,
  NotInvertible,
  SymbolicFieldUnsupported,
  InvalidField,
  MalformedBasis,
  ClassNotFixed,
  NotMultiplicative,
  NotClosed,
  ZeroRep,
  NotIndecomposable,
  NotMeetSemilattice,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every library operation.  The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pf
