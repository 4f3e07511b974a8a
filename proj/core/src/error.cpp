#include "hopfq/error.hpp"

namespace hopfq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::NonNilpotent: return "NonNilpotent";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BadPositions: return "BadPositions";
    case ErrorKind::BadLeg: return "BadLeg";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::LengthOverflow: return "LengthOverflow";
    case ErrorKind::WindowOverflow: return "WindowOverflow";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotCounital: return "NotCounital";
    case ErrorKind::NotFormallyNilpotent: return "NotFormallyNilpotent";
    case ErrorKind::DegreeGuard: return "DegreeGuard";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotAction: return "NotAction";
    case ErrorKind::DegenerateDegrees: return "DegenerateDegrees";
    case ErrorKind::ZeroDegree: return "ZeroDegree";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace hopfq
