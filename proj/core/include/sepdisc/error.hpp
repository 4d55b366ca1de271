#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepdisc {

enum class ErrorCode {
  NotHermitian,
  DimensionMismatch,
  WrongSpace,
  BadBipartition,
  NotIndependent,
  PreconditionViolated,
  PhiProduct,
  NotPSD,
  InvalidInstance,
  NotMaxEnt,
  WrongForm,
  CountMismatch,
  ParamsOutOfRange,
  TargetsOutOfRange,
  PointOutsideTetrahedron,
  NotUnitary,
  Parse,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is stable,
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sepdisc
