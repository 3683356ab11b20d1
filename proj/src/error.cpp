#include "modlift/error.hpp"

namespace modlift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoUnity: return "NoUnity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NotHollowUniform: return "NotHollowUniform";
    case ErrorKind::NotEpi: return "NotEpi";
    case ErrorKind::CardinalityVacuous: return "CardinalityVacuous";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::WrongBranch: return "WrongBranch";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::CertificateFailed: return "CertificateFailed";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace modlift
