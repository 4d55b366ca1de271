#include "sepdisc/config.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "sepdisc/error.hpp"

namespace sepdisc {

namespace {
Tolerances& mutable_tolerances() {
  static Tolerances t;
  return t;
}
}  // namespace

const Tolerances& tolerances() { return mutable_tolerances(); }

void set_tolerances(const Tolerances& t) { mutable_tolerances() = t; }

bool apply_tolerance_env() {
  const char* raw = std::getenv("SEPDISC_TOL");
  if (raw == nullptr || *raw == '\0') return false;
  double value = 0.0;
  try {
    value = std::stod(raw);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, std::string("SEPDISC_TOL is not a number: ") + raw);
  }
  if (!(value > 0.0) || value >= 1e-2) {
    throw Error(ErrorCode::Parse, std::string("SEPDISC_TOL out of range (0, 1e-2): ") + raw);
  }
  Tolerances t = tolerances();
  t.rank = value;
  t.psd = value;
  set_tolerances(t);
  return true;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WrongSpace: return "WrongSpace";
    case ErrorCode::BadBipartition: return "BadBipartition";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::PhiProduct: return "PhiProduct";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::NotMaxEnt: return "NotMaxEnt";
    case ErrorCode::WrongForm: return "WrongForm";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorCode::TargetsOutOfRange: return "TargetsOutOfRange";
    case ErrorCode::PointOutsideTetrahedron: return "PointOutsideTetrahedron";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace sepdisc
