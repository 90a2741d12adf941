#pragma once

#include <stdexcept>
#include <string>

namespace minkq {

enum class ErrorCode {
  DegenerateInput = 1,
  BadSpec,
  NegativeMass,
  QuadratureFailure,
  BadMesh,
  NumericalFailure,
  InsufficientSpectrum,
  DimensionError,
  SingularGM,
  ZeroDenominator,
  BadParam,
};

const char* to_string(ErrorCode code) noexcept;

// All failures raised by the library carry one of the codes above; the C API
// maps them one-to-one onto minkq_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace minkq
