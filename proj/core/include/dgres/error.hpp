#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgres {

/// Every failure the library reports. The CLI maps these onto report
/// entries and exit codes, so names are stable.
enum class ErrorKind {
  InvalidField,
  FieldMismatch,
  ShapeMismatch,
  NotSquareZero,
  NotChainMap,
  ShiftNotZero,
  LeibnizViolation,
  AssociativityViolation,
  UnitViolation,
  FunctorViolation,
  UnknownObject,
  UnknownFixture,
  NotClosed,
  WrongDegree,
  ObjectMismatch,
  ShapeError,
  WindowTooSmall,
  NotMonotone,
  InductiveHypothesisViolated,
  NotStrictlyInvertible,
  SemisimplicialIdentityViolation,
  NotASubcomplex,
  TruncationUnsound,
  IncompatibleData,
  ParseError,
  VersionMismatch,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace dgres
