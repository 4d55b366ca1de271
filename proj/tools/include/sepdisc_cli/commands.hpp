#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sepdisc/constructions.hpp"
#include "sepdisc_cli/report.hpp"
#include "sepdisc_cli/state_file.hpp"
#include "sepdisc_cli/suites.hpp"

namespace sepdisc::cli {

/// Exit codes: 0 distinguishable, 1 indistinguishable, 2 undecided, 3 input error.
inline constexpr int kExitInputError = 3;

struct DecideOptions {
  bool compact = false;      // single-line JSON
  bool feasibility = false;  // skip the analytic routes
};

/// Runs the decider and writes the report. Returns the status exit code.
int cmd_decide(const StateFile& file, const DecideOptions& opts, std::ostream& out, std::ostream& err);

StateFile construct_family(double alpha, double beta, double gamma);
StateFile construct_targets(double c1, double c2, double c3);
StateFile construct_tetra(double x1, double x2, double x3);
StateFile construct_subspace(const std::string& which);  // "dim7" | "dim6"
/// Distinguishable basis of {phi}^perp; phi is the file's phi, or its only
/// state. Throws InvalidInstance when {phi}^perp has no such basis or the
/// answer is undecided.
StateFile construct_locc_basis(const StateFile& input);

/// Writes the tetrahedron sweep as CSV.
void write_sweep(const std::vector<SweepRow>& rows, std::ostream& out);

/// Runs "lemmas", "theorem2", "tetra", "subspaces" or "all". Returns 0
/// when every property passes.
int cmd_verify(const std::string& suite, const SuiteOptions& opts, std::ostream& out);

/// Full command line (without the program name).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sepdisc::cli
