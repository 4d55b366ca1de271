#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sepdisc/constructions.hpp"
#include "sepdisc/discrimination.hpp"
#include "sepdisc/random.hpp"

namespace sepdisc::cli {

struct PropertyResult {
  std::string name;
  int samples = 0;
  int failures = 0;
  double worst = 0.0;  // worst residual seen, compared against limit
  double limit = 0.0;
  std::string note;
  bool pass() const { return samples > 0 && failures == 0; }
};

struct SuiteResult {
  std::string name;
  std::vector<PropertyResult> properties;
  bool pass() const;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  int trace_support_pairs = 200;
  int unique_decomposition_states = 100;
  int rank2_per_case = 50;
  int mixing_weight_pairs = 50;
  int oracle_bases = 200;
  int family_grid = 20;
  int witness_samples = 100;
  double tetra_step = 0.05;
  int subspace_bases = 20;
};

// -- individual properties ------------------------------------------------------

/// 0 <= E <= I against random density matrices: half with E >= P (trace
/// one expected), half with E = P - eps |v><v| (trace below one expected).
PropertyResult trace_support_pairs(int n, Rng& rng);
/// phi = a + b with random product a, b at entry distance 3: the
/// classifier recovers {a, b}.
PropertyResult unique_decomposition(int n, Rng& rng);
/// One result per rank-two case (i, ii, iii, entangled); each constructed
/// mixture must land in its case and agree with the partial transpose.
std::vector<PropertyResult> rank2_cases(int per_case, Rng& rng);
/// Anti-parallel pairs: separable at lambda*, entangled at lambda*(1 +- 1e-3).
PropertyResult mixing_weight_uniqueness(int n, Rng& rng);

/// Analytic 2x2 decider against the feasibility solver on random bases of
/// {phi}^perp; every other instance is a constructed distinguishable basis.
PropertyResult oracle_equivalence(int n, Rng& rng);
/// sum C(Psi_k) - C(Phi) on a grid^3 of valid family parameters.
PropertyResult family_identity(int grid);
/// At the gamma endpoints exactly one of Psi_2, Psi_3 is product.
PropertyResult family_endpoints(int grid);
/// Interior family points: Distinguishable, valid certificate, >= 2
/// entangled members and the LOCC flag set.
PropertyResult sep_not_locc_witness(int n, Rng& rng);

struct SweepRow {
  TetraPoint x;
  std::array<double, 3> achieved{};
  double max_error = 0.0;
  double unitarity_defect = 0.0;
  bool face = false;  // x1 + x2 + x3 = 1
  Status status = Status::Undecided;
};

/// Grid points i*step inside the tetrahedron, in lexicographic order.
std::vector<SweepRow> tetra_sweep(double step);
PropertyResult tetra_roundtrip(const std::vector<SweepRow>& rows);
PropertyResult tetra_verdicts(const std::vector<SweepRow>& rows);

PropertyResult subspace_properties(SubspaceKind kind);
/// Feasibility stalls (residual > 1e-4) on random bases of the subspace.
PropertyResult subspace_stall(SubspaceKind kind, int n, Rng& rng);

// -- suites -----------------------------------------------------------------------

SuiteResult run_lemmas(const SuiteOptions& o);
SuiteResult run_two_qubit(const SuiteOptions& o);
SuiteResult run_tetra(const SuiteOptions& o);
SuiteResult run_subspaces(const SuiteOptions& o);

void print(const PropertyResult& p, std::ostream& out);
void print(const SuiteResult& s, std::ostream& out);

}  // namespace sepdisc::cli
