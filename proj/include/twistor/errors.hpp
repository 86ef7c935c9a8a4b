#pragma once

#include <stdexcept>
#include <string>

namespace twistor {

enum class ErrorKind {
  RingMismatch,
  InexactDivision,
  NonUnitConstantTerm,
  NotASquare,
  NotALocusPoint,
  InfiniteSlope,
  SingularDenominator,
  IoError,
  CompositeModulus,
  EvenCharacteristic,
  NotAKnRoot,
  NotOnVariety,
  MissingSquareRoot,
  NotAResidueRoot,
  MixedSlopeUnsupported,
  UnsupportedExtension,
  PrecisionExhausted,
  NonUnitDerivative,
  MismatchBeyondTolerance,
  ZeroSeries,
  NotParabolicResidue,
  InvalidArgument,
};

inline const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::NotALocusPoint: return "NotALocusPoint";
    case ErrorKind::InfiniteSlope: return "InfiniteSlope";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::NotAKnRoot: return "NotAKnRoot";
    case ErrorKind::NotOnVariety: return "NotOnVariety";
    case ErrorKind::MissingSquareRoot: return "MissingSquareRoot";
    case ErrorKind::NotAResidueRoot: return "NotAResidueRoot";
    case ErrorKind::MixedSlopeUnsupported: return "MixedSlopeUnsupported";
    case ErrorKind::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NonUnitDerivative: return "NonUnitDerivative";
    case ErrorKind::MismatchBeyondTolerance: return "MismatchBeyondTolerance";
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::NotParabolicResidue: return "NotParabolicResidue";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace twistor
