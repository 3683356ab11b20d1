#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modlift {

enum class ErrorKind {
  NonPrime,
  NotClosed,
  NoUnity,
  NotAssociative,
  NotUnital,
  ShapeMismatch,
  AlgebraMismatch,
  TooLarge,
  ZeroModule,
  NotHollowUniform,
  NotEpi,
  CardinalityVacuous,
  ZeroInput,
  WrongBranch,
  NotWellDefined,
  CertificateFailed,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is what callers switch on;
/// the message carries the human-readable detail (bounds, offending field).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace modlift
