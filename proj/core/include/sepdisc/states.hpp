#pragma once

#include <array>
#include <vector>

#include "sepdisc/linalg.hpp"
#include "sepdisc/space.hpp"

namespace sepdisc {

/// Unit-norm amplitude vector over a StateSpace.
class PureState {
 public:
  PureState() = default;

  /// Throws DimensionMismatch on a length mismatch and PreconditionViolated
  /// when the norm is off by more than tolerances().unit_norm.
  PureState(StateSpace space, ComplexVector amplitudes);

  /// Rescales to unit norm; throws PreconditionViolated on the zero vector.
  static PureState normalized(StateSpace space, ComplexVector amplitudes);

  /// Computational basis state |digits>.
  static PureState basis(const StateSpace& space, const std::vector<int>& digits);

  /// Normalized tensor product of local vectors, one per party.
  static PureState product(const StateSpace& space, const std::vector<ComplexVector>& factors);

  const StateSpace& space() const { return space_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  int dim() const { return space_.total(); }

  Complex inner(const PureState& other) const;  // <this|other>
  ComplexMatrix density() const { return amplitudes_ * amplitudes_.adjoint(); }

  /// |<a|b>| >= 1 - tol.
  bool same_ray(const PureState& other, double tol) const;

 private:
  StateSpace space_;
  ComplexVector amplitudes_;
};

/// Wootters-style magic basis coordinates; C = |sum of squares|.
struct MagicBasisCoords {
  std::array<Complex, 4> lambdas{};
  double concurrence() const;
};

/// The four magic basis states of 2x2:
/// (|00>+|11>)/sqrt2, i(|00>-|11>)/sqrt2, i(|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2.
const std::array<PureState, 4>& magic_basis();

/// 2x2 coefficient matrix M with |psi> = (I (x) M)|Phi+>, i.e.
///   M(j, i) = sqrt(2) <ij|psi>.
/// M acts on the second factor. Throws WrongSpace unless the space is 2x2.
ComplexMatrix coeff_matrix(const PureState& psi);

/// Inverse of coeff_matrix. Does not normalize.
ComplexVector from_coeff_matrix(const ComplexMatrix& m);

/// |det coeff_matrix(psi)|, in [0, 1].
double concurrence(const PureState& psi);

MagicBasisCoords magic_coords(const PureState& psi);

/// D-1 orthonormal states spanning {phi}^perp.
std::vector<PureState> orthocomplement_basis(const PureState& phi);

/// Orthonormal basis of span(states)^perp. `states` must be orthonormal.
std::vector<PureState> orthocomplement_basis(const std::vector<PureState>& states);

/// Gram matrix <s_i|s_j>.
ComplexMatrix gram(const std::vector<PureState>& states);

/// max |G - I| entry for the states' Gram matrix.
double orthonormality_defect(const std::vector<PureState>& states);

}  // namespace sepdisc
