#pragma once

namespace sepdisc {

/// Process-wide numerical tolerances. Every decider compares against these.
struct Tolerances {
  double rank = 1e-9;          // relative singular-value cutoff
  double psd = 1e-9;           // min eigenvalue >= -psd counts as PSD
  double orthonormal = 1e-10;  // Gram-matrix defect for "orthonormal"
  double hermitian = 1e-8;     // max |A - A^dagger| before NotHermitian
  double unit_norm = 1e-10;    // PureState norm defect
  double state_match = 1e-9;   // |<a|b>| >= 1 - state_match means equal up to phase
  double root_check = 1e-7;    // sigma2/sigma1 cutoff when verifying roots of minor polynomials
  double concurrence = 1e-9;   // C below this is a product state
  double concurrence_sum = 1e-8;
  double lambda_match = 1e-8;  // relative tolerance on the rank-2 mixing weight
  double antiparallel_angle = 1e-8;
  double det_zero = 1e-12;
};

const Tolerances& tolerances();

/// Replace the process-wide record. Not thread-safe; call once at startup.
void set_tolerances(const Tolerances& t);

/// Reads SEPDISC_TOL (a positive real) and, when present, uses it as the
/// rank and PSD tolerance. Returns true when the variable was applied.
bool apply_tolerance_env();

}  // namespace sepdisc
