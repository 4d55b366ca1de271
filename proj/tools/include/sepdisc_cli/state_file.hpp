#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sepdisc/discrimination.hpp"
#include "sepdisc/states.hpp"

namespace sepdisc::cli {

inline constexpr const char* kFormatVersion = "1";

struct NamedState {
  std::string name;
  PureState state;
};

/// {"version": "1", "dims": [...], "states": [{"name", "amplitudes": [[re, im], ...]}], "phi": {...}}
struct StateFile {
  StateSpace space;
  std::vector<NamedState> states;
  std::optional<NamedState> phi;
  std::vector<std::string> warnings;  // filled by the parser, not serialized

  DiscriminationInstance instance() const;
};

/// Norm deviations above this are rejected, above kNormWarn they are
/// renormalized with a warning.
inline constexpr double kNormReject = 1e-8;
inline constexpr double kNormWarn = 1e-10;

/// Throws Error(Parse) with the line/column for syntax errors and the JSON
/// path of the offending field for validation errors.
StateFile parse_state_file(std::string_view text);

/// "-" reads standard input.
StateFile read_state_file(const std::string& path);

StateFile make_state_file(const std::vector<PureState>& states, const std::optional<PureState>& phi,
                          const std::string& prefix = "psi");

nlohmann::json to_json(const StateFile& file);
std::string dump_state_file(const StateFile& file);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace sepdisc::cli
