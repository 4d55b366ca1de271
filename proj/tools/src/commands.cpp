#include "sepdisc_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>

#include "sepdisc/config.hpp"
#include "sepdisc/error.hpp"

namespace sepdisc::cli {

int cmd_decide(const StateFile& file, const DecideOptions& opts, std::ostream& out, std::ostream& err) {
  for (const auto& w : file.warnings) err << "warning: " << w << "\n";
  const auto inst = file.instance();
  Verdict v = opts.feasibility ? decide_by_feasibility(inst) : decide(inst);
  const auto report = make_report(file, std::move(v));
  const auto j = to_json(report);
  out << (opts.compact ? j.dump() : j.dump(2)) << "\n";
  return exit_code(report.verdict.status);
}

StateFile construct_family(double alpha, double beta, double gamma) {
  const auto inst = family_sep_not_locc({alpha, beta, gamma});
  return make_state_file(inst.basis, inst.phi);
}

StateFile construct_targets(double c1, double c2, double c3) {
  const auto inst = basis_for_targets(c1, c2, c3);
  return make_state_file(inst.basis, inst.phi);
}

StateFile construct_tetra(double x1, double x2, double x3) {
  const auto inst = basis_from_unitary(tetra_unitary({x1, x2, x3}));
  return make_state_file(inst.basis, inst.phi);
}

StateFile construct_subspace(const std::string& which) {
  SubspaceKind kind;
  if (which == "dim7") {
    kind = SubspaceKind::Bipartite3x3Dim7;
  } else if (which == "dim6") {
    kind = SubspaceKind::Tripartite222Dim6;
  } else {
    throw Error(ErrorCode::PreconditionViolated, "subspace must be dim7 or dim6, got \"" + which + "\"");
  }
  return make_state_file(indistinguishable_subspace(kind).complement, std::nullopt, "s");
}

StateFile construct_locc_basis(const StateFile& input) {
  PureState phi;
  if (input.phi) {
    phi = input.phi->state;
  } else if (input.states.size() == 1) {
    phi = input.states.front().state;
  } else {
    throw Error(ErrorCode::InvalidInstance, "need a phi entry or exactly one state");
  }
  const auto sv = subspace_verdict(phi);
  if (sv.answer != SubspaceAnswer::HasLoccBasis)
    throw Error(ErrorCode::InvalidInstance, std::string(to_string(sv.answer)) + ": " + sv.reason);
  return make_state_file(sv.basis, phi);
}

void write_sweep(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "x1,x2,x3,achieved1,achieved2,achieved3,max_error,decide_status\n";
  for (const auto& r : rows) {
    out << std::setprecision(10) << r.x.x1 << ',' << r.x.x2 << ',' << r.x.x3 << std::setprecision(17);
    for (double a : r.achieved) out << ',' << a;
    out << ',' << std::setprecision(3) << r.max_error << ',' << to_string(r.status) << '\n';
  }
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, std::ostream& out) {
  std::vector<SuiteResult> results;
  const bool all = suite == "all";
  if (all || suite == "lemmas") results.push_back(run_lemmas(opts));
  if (all || suite == "theorem2") results.push_back(run_two_qubit(opts));
  if (all || suite == "tetra") results.push_back(run_tetra(opts));
  if (all || suite == "subspaces") results.push_back(run_subspaces(opts));
  if (results.empty()) throw Error(ErrorCode::PreconditionViolated, "unknown suite \"" + suite + "\"");
  bool ok = true;
  for (const auto& r : results) {
    print(r, out);
    ok = ok && r.pass();
  }
  out << (ok ? "all properties pass" : "some properties FAILED") << " (seed " << opts.seed << ")\n";
  return ok ? 0 : 1;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  apply_tolerance_env();

  CLI::App app{"Perfect discrimination of orthogonal pure states by separable operations", "sepdisc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::string input;
  DecideOptions dopts;
  auto* decide_cmd = app.add_subcommand("decide", "Decide a state file (\"-\" reads stdin)");
  decide_cmd->add_option("file", input, "state file")->required();
  decide_cmd->add_flag("--compact", dopts.compact, "single-line JSON");
  decide_cmd->add_flag("--feasibility", dopts.feasibility, "use only the PPT feasibility route");

  auto* construct = app.add_subcommand("construct", "Emit a state file");
  construct->require_subcommand(1);
  std::array<double, 3> p{};
  auto* family = construct->add_subcommand("family", "separable-but-not-LOCC basis");
  family->add_option("alpha", p[0])->required();
  family->add_option("beta", p[1])->required();
  family->add_option("gamma", p[2])->required();
  auto* targets = construct->add_subcommand("targets", "2x2 basis with prescribed concurrences");
  targets->add_option("c1", p[0])->required();
  targets->add_option("c2", p[1])->required();
  targets->add_option("c3", p[2])->required();
  auto* tetra = construct->add_subcommand("tetra", "basis of the maximally entangled complement");
  tetra->add_option("x1", p[0])->required();
  tetra->add_option("x2", p[1])->required();
  tetra->add_option("x3", p[2])->required();
  std::string which;
  auto* subspace = construct->add_subcommand("subspace", "indistinguishable subspace basis");
  subspace->add_option("kind", which, "dim7 or dim6")->required();
  auto* locc = construct->add_subcommand("locc-basis", "distinguishable basis of {phi}^perp");
  locc->add_option("file", input, "state file with phi")->required();

  double step = 0.05;
  std::string output;
  auto* sweep = app.add_subcommand("sweep", "Tetrahedron grid sweep as CSV");
  sweep->add_option("--step", step, "grid step, 0 < step <= 0.25")->default_val(0.05);
  sweep->add_option("--output,-o", output, "CSV path (\"-\" for stdout)")->required();

  std::string suite;
  SuiteOptions sopts;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("suite", suite, "lemmas | theorem2 | tetra | subspaces | all")
      ->required()
      ->check(CLI::IsMember({"lemmas", "theorem2", "tetra", "subspaces", "all"}));
  verify->add_option("--seed", sopts.seed, "random seed")->default_val(42);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*decide_cmd) return cmd_decide(read_state_file(input), dopts, out, err);
    if (*construct) {
      StateFile f;
      if (*family) f = construct_family(p[0], p[1], p[2]);
      else if (*targets) f = construct_targets(p[0], p[1], p[2]);
      else if (*tetra) f = construct_tetra(p[0], p[1], p[2]);
      else if (*subspace) f = construct_subspace(which);
      else f = construct_locc_basis(read_state_file(input));
      out << dump_state_file(f);
      return 0;
    }
    if (*sweep) {
      const auto rows = tetra_sweep(step);
      if (output == "-") {
        write_sweep(rows, out);
      } else {
        std::ofstream f(output);
        if (!f) throw Error(ErrorCode::PreconditionViolated, "cannot write " + output);
        write_sweep(rows, f);
        if (!f) throw Error(ErrorCode::PreconditionViolated, "write failed for " + output);
      }
      return 0;
    }
    if (*verify) return cmd_verify(suite, sopts, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sepdisc::cli
