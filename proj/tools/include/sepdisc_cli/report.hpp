#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sepdisc/discrimination.hpp"
#include "sepdisc_cli/state_file.hpp"

namespace sepdisc::cli {

struct VerdictReport {
  std::string tool_version;
  std::string input_digest;  // "sha256:<hex>" of the canonical input
  std::string timestamp;     // not part of the digest
  Verdict verdict;
};

std::string tool_version();
/// SHA-256 over the compact serialization of the (normalized) input.
std::string input_digest(const StateFile& file);
/// UTC, ISO 8601, seconds.
std::string utc_timestamp();

VerdictReport make_report(const StateFile& file, Verdict verdict);

nlohmann::json to_json(const VerdictReport& r);
/// Throws Error(Parse).
VerdictReport report_from_json(const nlohmann::json& j);

int exit_code(Status s);

Status status_from_string(std::string_view s);
TheoremTag tag_from_string(std::string_view s);
LoccFlag locc_flag_from_string(std::string_view s);

}  // namespace sepdisc::cli
