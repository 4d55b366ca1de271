#pragma once

#include <vector>

#include "sepdisc/linalg.hpp"
#include "sepdisc/space.hpp"

namespace sepdisc {

/// Find E_1..E_n with sum E_k = P_0 and every P_k + E_k in the PPT
/// relaxation of the separable cone (PSD, PSD partial transpose on each cut).
struct FeasibilityProblem {
  StateSpace space;
  std::vector<ComplexMatrix> projectors;   // P_1..P_n, mutually orthogonal
  ComplexMatrix residual;                  // P_0 = I - sum P_k
  std::vector<std::vector<int>> cuts;      // transposed party sets; every bipartition once by default

  int max_iterations = 20000;
  int check_every = 10;
  int stall_window = 500;
  double stall_improvement = 1e-12;
  // Also stalled when the window improvement is below this fraction of the
  // residual while the residual is still above feasible_tol.
  double stall_relative = 1e-3;
  double target = 1e-11;
  double feasible_tol = 1e-7;
  bool try_scalar = true;  // direct solve when rank P_0 = 1

  /// Validates the projectors and fills residual and cuts. Throws
  /// InvalidInstance when they are not orthogonal projectors.
  static FeasibilityProblem from_projectors(const StateSpace& space, std::vector<ComplexMatrix> projectors);
};

struct FeasibilityDiagnostics {
  int iterations = 0;
  double residual = 0.0;          // max of the three below
  double affine_residual = 0.0;   // ||sum E - P0||_F plus leakage outside supp P0
  double psd_violation = 0.0;     // max(0, -lambda_min(E_k))
  double ppt_violation = 0.0;     // max(0, -lambda_min((P_k + E_k)^Gamma))
  bool stalled = false;
  bool converged = false;
  bool scalar_reduction = false;  // rank P_0 = 1, solved over E_k = e_k P_0
};

struct FeasibilityResult {
  bool feasible = false;
  std::vector<ComplexMatrix> operators;  // E_1..E_n
  FeasibilityDiagnostics diagnostics;
  bool exact = false;  // PPT equals separability for this space
};

/// Dykstra alternating projections over the affine set, the PSD cone and
/// the PPT cones. Feasible when the residual drops below feasible_tol.
/// When P_0 has rank one the problem is scalar (E_k = e_k P_0) and is
/// solved directly first; Dykstra runs only if that finds no point.
FeasibilityResult feasibility_solve(const FeasibilityProblem& problem);

}  // namespace sepdisc
