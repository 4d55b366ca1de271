#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sepdisc/linalg.hpp"
#include "sepdisc/states.hpp"
#include "sepdisc/tensor_rank.hpp"

namespace sepdisc {

/// A reference state phi together with an orthonormal basis of {phi}^perp
/// (or of a subspace of it).
struct BasisInstance {
  PureState phi;
  std::vector<PureState> basis;
};

// -- separable-but-not-LOCC family ---------------------------------------------

struct FamilyParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Allowed gamma interval for given alpha, beta.
std::pair<double, double> family_gamma_range(double alpha, double beta);

/// Throws ParamsOutOfRange naming the violated inequality.
void validate(const FamilyParams& p);

/// Psi(t) = cos t |01> + sin t |10>, Phi(t) = cos t |00> + sin t |11>.
PureState family_psi(double t);
PureState family_phi(double t);

/// phi = Phi(beta); basis = Psi(alpha),
///   cos g Psi(alpha - pi/2) + sin g Phi(beta - pi/2),
///   sin g Psi(alpha - pi/2) - cos g Phi(beta - pi/2).
BasisInstance family_sep_not_locc(const FamilyParams& p);

/// Closed-form concurrences of the three family members.
std::array<double, 3> family_concurrences(const FamilyParams& p);

/// Basis of {phi}^perp in 2x2 with concurrences (c1, c2, c3), distinguishable
/// by separable operations. Throws TargetsOutOfRange.
BasisInstance basis_for_targets(double c1, double c2, double c3);

// -- tetrahedron ------------------------------------------------------------------

struct TetraPoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

/// Membership in the regular tetrahedron of admissible concurrence triples.
bool in_tetrahedron(const TetraPoint& p, double tol = 1e-12);

/// 3x3 unitary U with |sum_j U(k, j)^2| = x_k. Throws PointOutsideTetrahedron.
ComplexMatrix tetra_unitary(const TetraPoint& p);

/// psi_k = sum_l U(k, l) m_{l+1}, with m_1 = (|00> + |11>)/sqrt2 playing the
/// role of phi and m_2..m_4 the remaining magic basis states. Then
/// C(psi_k) = |sum_l U(k, l)^2|. Throws NotUnitary.
BasisInstance basis_from_unitary(const ComplexMatrix& u);

// -- indistinguishable subspaces ------------------------------------------------------

enum class SubspaceKind { Bipartite3x3Dim7, Tripartite222Dim6 };

std::string_view to_string(SubspaceKind k);

struct SubspaceSpec {
  SubspaceKind kind = SubspaceKind::Bipartite3x3Dim7;
  PureState phi1;
  PureState phi2;
  std::vector<PureState> complement;  // orthonormal basis of span{phi1, phi2}^perp
};

SubspaceSpec indistinguishable_subspace(SubspaceKind kind);

struct PropertyCheck {
  bool pass = false;
  int samples = 0;
  int failures = 0;
  std::string detail;
};

struct SubspaceReport {
  PropertyCheck p0;  // exactly one product vector in the span
  PropertyCheck p1;  // every entangled member has Schmidt number 3
  PropertyCheck p2;  // phi1 - phi2 / a has Schmidt number 3 for sampled a
  std::optional<ProductVector> product_vector;
  bool all_pass() const { return p0.pass && p1.pass && p2.pass; }
};

SubspaceReport verify_P0_P1_P2(const PureState& phi1, const PureState& phi2);
SubspaceReport verify_P0_P1_P2(const SubspaceSpec& spec);

/// Schmidt number of a pure state: the Schmidt rank for two parties. For
/// more parties 1, 2, or 3 meaning "at least 3" (no two-term product
/// decomposition exists). nullopt when the classification is undecided.
std::optional<int> schmidt_number(const PureState& psi);

// -- product bases ------------------------------------------------------------------

/// Orthogonal product vectors completing `vectors` (orthonormal products)
/// to a product basis, by recursive local splitting. nullopt when the
/// splitting fails; that does not prove the set is uncompletable.
std::optional<std::vector<ProductVector>> complete_product_basis(const std::vector<ProductVector>& vectors,
                                                                 const StateSpace& space);

/// Basis of {phi}^perp with one entangled member sin t a - cos t b and a
/// product completion of {a, b}^perp. Throws WrongForm unless phi has an
/// orthogonal two-term product decomposition.
std::vector<PureState> locc_basis_sch2(const PureState& phi);

}  // namespace sepdisc
