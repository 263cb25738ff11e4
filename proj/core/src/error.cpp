#include "dgres/error.hpp"

namespace dgres {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSquareZero: return "NotSquareZero";
    case ErrorKind::NotChainMap: return "NotChainMap";
    case ErrorKind::ShiftNotZero: return "ShiftNotZero";
    case ErrorKind::LeibnizViolation: return "LeibnizViolation";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::UnitViolation: return "UnitViolation";
    case ErrorKind::FunctorViolation: return "FunctorViolation";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::ObjectMismatch: return "ObjectMismatch";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::InductiveHypothesisViolated: return "InductiveHypothesisViolated";
    case ErrorKind::NotStrictlyInvertible: return "NotStrictlyInvertible";
    case ErrorKind::SemisimplicialIdentityViolation: return "SemisimplicialIdentityViolation";
    case ErrorKind::NotASubcomplex: return "NotASubcomplex";
    case ErrorKind::TruncationUnsound: return "TruncationUnsound";
    case ErrorKind::IncompatibleData: return "IncompatibleData";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace dgres
