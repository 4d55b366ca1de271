#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sepdisc/linalg.hpp"
#include "sepdisc/states.hpp"

namespace sepdisc {

using Rng = std::mt19937_64;

ComplexVector random_complex_vector(int n, Rng& rng);

/// Haar-distributed n x n unitary (QR of a complex Ginibre matrix with
/// phase-fixed R diagonal).
ComplexMatrix random_unitary(int n, Rng& rng);

PureState random_state(const StateSpace& space, Rng& rng);
PureState random_product_state(const StateSpace& space, Rng& rng);

/// U_1 (x) ... (x) U_K with independent Haar local unitaries.
ComplexMatrix random_local_unitary(const StateSpace& space, Rng& rng);

/// Random orthonormal basis of the orthocomplement of `fixed` (which must
/// be orthonormal): the canonical completion mixed by a Haar unitary.
std::vector<PureState> random_orthocomplement_basis(const std::vector<PureState>& fixed, Rng& rng);

/// Random orthogonal product basis: local Haar bases at every party.
std::vector<PureState> random_product_basis(const StateSpace& space, Rng& rng);

}  // namespace sepdisc
