#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepdisc/linalg.hpp"
#include "sepdisc/states.hpp"
#include "sepdisc/tensor_rank.hpp"

namespace sepdisc {

struct ProductTerm {
  double weight = 0.0;  // coefficient of |v><v|, v unit norm
  ProductVector vector;
};

/// sum_i w_i |v_i><v_i| with product v_i.
struct ProductDecomposition {
  std::vector<ProductTerm> terms;

  ComplexMatrix assemble() const;
  /// ||assemble() - target||_F / max(1, ||target||_F)
  double reassembly_error(const ComplexMatrix& target) const;
};

enum class SeparabilityStatus { Separable, Entangled, Undecided };

std::string_view to_string(SeparabilityStatus s);

struct EntanglementWitness {
  enum class Kind { PartialTranspose, SchmidtRank, MixtureWithProduct, NoProductPair, OffDiagonal };
  Kind kind = Kind::PartialTranspose;
  double pt_eigenvalue = 0.0;          // PartialTranspose
  ComplexVector pt_eigenvector;        // PartialTranspose
  std::vector<int> cut;                // parties transposed
  std::string note;
};

struct SeparabilityVerdict {
  SeparabilityStatus status = SeparabilityStatus::Undecided;
  std::optional<ProductDecomposition> decomposition;  // when Separable
  std::optional<EntanglementWitness> witness;         // when Entangled
  std::string note;
};

// -- trace lemma -------------------------------------------------------------

enum class Lemma1Outcome { HoldsBothWays, Violation, Inconsistent };

struct Lemma1Result {
  Lemma1Outcome outcome = Lemma1Outcome::Inconsistent;
  double trace = 0.0;             // tr(E rho)
  double min_eig_difference = 0;  // lambda_min(E - P)
  bool trace_is_one = false;
  bool dominates = false;         // E - P >= 0
  std::string detail;
};

/// For 0 <= E <= I and a density matrix rho: tr(E rho) = 1 iff E - P >= 0,
/// P the support projector of rho. Reports both sides; Violation means both
/// sides are false, Inconsistent means they disagree.
Lemma1Result lemma1_check(const ComplexMatrix& e, const ComplexMatrix& rho);

/// Projector onto the span of eigenvectors with eigenvalue above tol.
ComplexMatrix support_projector(const ComplexMatrix& rho, double tol);

// -- rank-two mixtures -------------------------------------------------------

enum class Rank2Case { BothProduct, ProductWithZeroWeight, ProductPair, Entangled };

std::string_view to_string(Rank2Case c);

struct Rank2Result {
  SeparabilityVerdict verdict;
  Rank2Case case_tag = Rank2Case::Entangled;
  // The unique weight making the mixture separable when both states are
  // entangled and the span holds a suitable product pair.
  std::optional<double> lambda_star;
};

/// Separability of |psi><psi| + lambda |phi><phi|, decided by the three
/// product-pair cases. Separable results carry a product decomposition.
Rank2Result rank2_separability(const PureState& psi, const PureState& phi, double lambda);

struct AntiparallelResult {
  bool pass = false;
  double lambda_star = 0.0;  // C(psi) / C(phi)
  Complex mu1, mu2;          // eigenvalues of Psi * Phi^{-1}
  std::string reason;
};

/// Eigenvalues of Psi Phi^{-1} (coefficient matrices) are anti-parallel.
/// Throws PhiProduct when |det Phi| <= tolerances().det_zero.
AntiparallelResult antiparallel_test(const PureState& psi, const PureState& phi);

// -- PPT oracle ----------------------------------------------------------------

/// Entangled (with witness) when the partial transpose on `transposed`
/// has an eigenvalue below -psd tol. Otherwise Separable for 2x2 and 2x3
/// bipartite spaces, the rank <= 2 analytic answer when it applies, and
/// Undecided elsewhere. Throws NotPSD.
SeparabilityVerdict ppt_oracle(const ComplexMatrix& rho, const StateSpace& space,
                               const std::vector<int>& transposed);

/// True for two-party spaces with total dimension <= 6.
bool ppt_is_exact(const StateSpace& space);

}  // namespace sepdisc
