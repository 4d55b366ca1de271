#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sepdisc/space.hpp"

namespace sepdisc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Hermitian eigendecomposition: eigenvalues ascending, eigenvectors as
/// orthonormal columns in matching order.
struct EigenResult {
  RealVector values;
  ComplexMatrix vectors;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Cyclic complex Jacobi. The input is symmetrized before rotating; an
/// asymmetry above tolerances().hermitian throws NotHermitian.
EigenResult hermitian_eig(const ComplexMatrix& a);

RealVector hermitian_eigenvalues(const ComplexMatrix& a);
double min_eigenvalue(const ComplexMatrix& a);

/// max |a_ij - conj(a_ji)|
double hermitian_defect(const ComplexMatrix& a);

/// Transpose on one tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix& a, const StateSpace& space, int party);

/// Transpose on every party in `parties` (one side of a bipartition).
ComplexMatrix partial_transpose(const ComplexMatrix& a, const StateSpace& space,
                                const std::vector<int>& parties);

struct PsdCheck {
  bool psd = false;
  double min_eigenvalue = 0.0;
  explicit operator bool() const { return psd; }
};

PsdCheck psd_check(const ComplexMatrix& a, double tol);

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped).
ComplexMatrix project_psd(const ComplexMatrix& a);

ComplexMatrix projector(const ComplexVector& v);
ComplexMatrix projector(const std::vector<ComplexVector>& orthonormal);

/// Orthonormal basis completion: returns `dim - basis.size()` unit vectors
/// orthogonal to `basis` (which must be orthonormal). Gram-Schmidt seeded
/// by the standard basis, picking at each step the candidate with the
/// largest residual norm (ties go to the lowest index).
std::vector<ComplexVector> complete_orthonormal(const std::vector<ComplexVector>& basis, int dim);

/// Orthonormal basis of span(vectors), rank counted at `rel_tol`.
std::vector<ComplexVector> orthonormal_span(const std::vector<ComplexVector>& vectors,
                                            double rel_tol);

/// Largest-to-smallest singular values.
RealVector singular_values(const ComplexMatrix& a);

/// Number of singular values above rel_tol * largest.
int numerical_rank(const ComplexMatrix& a, double rel_tol);

}  // namespace sepdisc
