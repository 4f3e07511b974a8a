#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfq {

enum class ErrorKind {
  NonUnit,
  NonNilpotent,
  OrderMismatch,
  DivisionByZero,
  BadPositions,
  BadLeg,
  ArityMismatch,
  HostMismatch,
  NotInvertible,
  NotPrimitiveRoot,
  InvalidGroup,
  LengthOverflow,
  WindowOverflow,
  NotAComplex,
  NotUnital,
  NotCounital,
  NotFormallyNilpotent,
  DegreeGuard,
  NotHomogeneous,
  NotAutomorphism,
  NotAction,
  DegenerateDegrees,
  ZeroDegree,
  UnknownSuite,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and tests)
/// can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Scalar-grammar failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::ParseError,
              what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hopfq
