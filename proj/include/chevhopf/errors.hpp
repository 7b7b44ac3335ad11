#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chevhopf {

enum class ErrorCode {
  DivisionByZero,
  ConductorTooLarge,
  ArityMismatch,
  NotInvertible,
  ParityError,
  NotAbelian,
  TooLarge,
  NotPrimitive,
  NotSymmetric,
  BadPolarization,
  InvalidTwist,
  NotGroupAlgebra,
  BadParityImplementer,
  NotSubHopf,
  Degenerate,
  NotDiagonalizable,
  DecompositionMismatch,
  NoSuchU,
  Unsupported,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ConductorTooLarge: return "ConductorTooLarge";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::BadPolarization: return "BadPolarization";
    case ErrorCode::InvalidTwist: return "InvalidTwist";
    case ErrorCode::NotGroupAlgebra: return "NotGroupAlgebra";
    case ErrorCode::BadParityImplementer: return "BadParityImplementer";
    case ErrorCode::NotSubHopf: return "NotSubHopf";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorCode::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorCode::NoSuchU: return "NoSuchU";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chevhopf
