#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepdisc/certificate.hpp"
#include "sepdisc/constructions.hpp"
#include "sepdisc/feasibility.hpp"
#include "sepdisc/states.hpp"

namespace sepdisc {

/// Orthogonal pure states (or, for mixed inputs, mutually orthogonal
/// projectors) to be discriminated perfectly.
struct DiscriminationInstance {
  StateSpace space;
  std::vector<PureState> states;          // pure form
  std::vector<ComplexMatrix> projectors;  // mixed form, used when states is empty
  std::optional<PureState> phi;           // declared when states span {phi}^perp

  static DiscriminationInstance pure(std::vector<PureState> states, std::optional<PureState> phi = std::nullopt);
  static DiscriminationInstance mixed(const StateSpace& space, std::vector<ComplexMatrix> projectors);

  bool is_pure() const { return !states.empty(); }
  std::size_t size() const { return is_pure() ? states.size() : projectors.size(); }
  /// Supports P_k (|psi_k><psi_k| for pure states).
  std::vector<ComplexMatrix> supports() const;
  /// Normalized density matrices P_k / tr P_k.
  std::vector<ComplexMatrix> densities() const;
  /// Throws InvalidInstance.
  void validate() const;
};

enum class Status { Distinguishable, Indistinguishable, Undecided };

/// Which decision route produced a verdict.
enum class TheoremTag {
  T1,  // general criterion: full basis, product complement, feasibility
  C1,  // product states completed to a product basis
  T2,  // two-qubit anti-parallel and concurrence-sum test
  C2,  // two-qubit, maximally entangled phi
  T4,  // phi is a product prefix times a two-party entangled state
  T5,  // phi has an orthogonal two-term decomposition with entry distance >= 3
  T6,  // phi has orthogonal Schmidt number >= 3
  T8   // two-dimensional complement: subspace report attached
};

enum class LoccFlag { LoccIndistinguishable, Unknown };

std::string_view to_string(Status s);
std::string_view to_string(TheoremTag t);
std::string_view to_string(LoccFlag f);

struct Verdict {
  Status status = Status::Undecided;
  TheoremTag tag = TheoremTag::T1;
  std::optional<PovmCertificate> certificate;
  std::string reason;
  LoccFlag locc_flag = LoccFlag::Unknown;
  std::optional<FeasibilityDiagnostics> feasibility;
  std::optional<SubspaceReport> subspace;
};

Verdict decide(const DiscriminationInstance& instance);

/// Two-qubit basis of {phi}^perp. Throws PhiProduct when phi is product.
Verdict decide_2x2_basis(const PureState& phi, const std::vector<PureState>& basis);

/// Two-qubit basis whose complement is maximally entangled. Throws NotMaxEnt.
Verdict decide_max_ent_basis(const std::vector<PureState>& basis);

/// phi = |a_1 ... a_{K-2}> (x) phi' with phi' entangled on two parties.
/// Throws WrongForm.
Verdict decide_multipartite_sch2(const PureState& phi, const std::vector<PureState>& basis);

/// phi with an orthogonal two-term decomposition at entry distance >= 3.
/// Throws WrongForm.
Verdict decide_h3(const PureState& phi, const std::vector<PureState>& basis);

enum class SubspaceAnswer { NoDistinguishableBasis, HasLoccBasis, Undecided };

std::string_view to_string(SubspaceAnswer a);

struct SubspaceVerdict {
  SubspaceAnswer answer = SubspaceAnswer::Undecided;
  std::vector<PureState> basis;  // HasLoccBasis
  std::string reason;
};

/// Does {phi}^perp have a basis distinguishable by separable operations?
/// Throws PhiProduct.
SubspaceVerdict subspace_verdict(const PureState& phi);

/// Feasibility route on its own (PPT relaxation).
Verdict decide_by_feasibility(const DiscriminationInstance& instance);

}  // namespace sepdisc
