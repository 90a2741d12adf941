#include "minkq/error.hpp"

namespace minkq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::BadMesh: return "BadMesh";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::InsufficientSpectrum: return "InsufficientSpectrum";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::SingularGM: return "SingularGM";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BadParam: return "BadParam";
  }
  return "Unknown";
}

}  // namespace minkq
