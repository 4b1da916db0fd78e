#include "posetforge/error.hpp"

namespace pf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MismatchedParent: return "MismatchedParent";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::Singleton: return "Singleton";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::SymbolicFieldUnsupported: return "SymbolicFieldUnsupported";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::MalformedBasis: return "MalformedBasis";
    case ErrorCode::ClassNotFixed: return "ClassNotFixed";
    case ErrorCode::NotMultiplicative: return "NotMultiplicative";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ZeroRep: return "ZeroRep";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::NotMeetSemilattice: return "NotMeetSemilattice";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace pf
