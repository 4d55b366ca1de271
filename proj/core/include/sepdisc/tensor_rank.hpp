#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepdisc/linalg.hpp"
#include "sepdisc/states.hpp"

namespace sepdisc {

/// weight * (factor_1 (x) ... (x) factor_K). Factors are stored unit-norm
/// by the routines in this header, but any nonzero factor is accepted.
struct ProductVector {
  std::vector<ComplexVector> factors;
  Complex weight{1.0, 0.0};

  ComplexVector assemble() const;
  double norm() const;
  PureState state(const StateSpace& space) const;  // normalized
};

struct SchmidtInfo {
  int rank = 0;
  std::vector<double> coefficients;  // descending, only those above tolerance
  ComplexMatrix left;                // columns: left Schmidt vectors
  ComplexMatrix right;               // columns: right Schmidt vectors
  std::vector<int> left_parties;
};

/// Amplitudes reshaped to a (left parties) x (remaining parties) matrix.
ComplexMatrix cut_matrix(const ComplexVector& amplitudes, const StateSpace& space,
                         const std::vector<int>& left_parties);

/// Schmidt decomposition across the cut `left_parties | rest`:
///   psi = sum_i c_i |left_i>|right_i>.
SchmidtInfo schmidt_decompose(const PureState& psi, std::vector<int> left_parties);

/// Product-state factorization of a vector (any norm). nullopt when some
/// single-party cut has singular-value ratio above `rel_tol`.
std::optional<ProductVector> factorize(const ComplexVector& v, const StateSpace& space, double rel_tol);

bool is_product(const PureState& psi);

/// Number of parties where the factors are not parallel.
int entry_distance(const ProductVector& a, const ProductVector& b);

struct SpanProducts {
  bool infinitely_many = false;
  std::vector<ProductVector> vectors;  // unit norm, at most 2 unless infinitely_many
};

/// All product vectors (up to scale) in span{psi, phi}: the roots z of the
/// rank-one conditions on psi + z*phi, plus phi itself when it is product.
SpanProducts product_vectors_in_span(const PureState& psi, const PureState& phi);
SpanProducts product_vectors_in_span(const ComplexVector& x, const ComplexVector& y,
                                     const StateSpace& space);

struct Schmidt2Decomposition {
  ProductVector a;
  ProductVector b;
  bool orthogonal = false;
  bool unique = false;
  int entry_distance = 0;
};

/// phi = cos(theta) |a_hat> + sin(theta) |b_hat> for an orthogonal decomposition.
struct OrthogonalSchmidt2 {
  double theta = 0.0;
  PureState a_hat;
  PureState b_hat;
};

OrthogonalSchmidt2 orthogonal_form(const Schmidt2Decomposition& d, const StateSpace& space);

enum class Schmidt2Kind { Product, Schmidt2, AtLeast3, Undecided };

std::string_view to_string(Schmidt2Kind k);

struct Schmidt2Classification {
  Schmidt2Kind kind = Schmidt2Kind::Undecided;
  // Present for Schmidt2, and for AtLeast3 when the cause is a unique but
  // non-orthogonal two-term decomposition.
  std::optional<Schmidt2Decomposition> decomposition;
  // Parties carrying a fixed local factor (single-party cut of rank one).
  std::vector<int> product_parties;
  std::string detail;
};

/// Product / orthogonal Schmidt number 2 / Sch_perp >= 3 classification.
/// Undecided only when the numerical search is inconsistent.
Schmidt2Classification schmidt2_classify(const PureState& phi);

}  // namespace sepdisc
