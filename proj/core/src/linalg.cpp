#include "sepdisc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sepdisc/config.hpp"
#include "sepdisc/error.hpp"

namespace sepdisc {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

double hermitian_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

EigenResult hermitian_eig(const ComplexMatrix& input) {
  if (input.rows() != input.cols())
    throw Error(ErrorCode::DimensionMismatch, "hermitian_eig needs a square matrix");
  const double defect = hermitian_defect(input);
  if (!(defect <= tolerances().hermitian))
    throw Error(ErrorCode::NotHermitian, "asymmetry " + std::to_string(defect));

  const Eigen::Index n = input.rows();
  ComplexMatrix a = 0.5 * (input + input.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double scale = std::max(a.norm(), std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-16 * scale) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300 || mag <= 1e-18 * scale) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        // Phase-rotate to a real symmetric 2x2 block, then a real rotation.
        const Complex phase = a(p, q) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]] on coordinates (p, q).
        const Complex j00 = c, j01 = s;
        const Complex j10 = -s * std::conj(phase), j11 = c * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * j00 + akq * j10;
          a(k, q) = akp * j01 + akq * j11;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(j00) * apk + std::conj(j10) * aqk;
          a(q, k) = std::conj(j01) * apk + std::conj(j11) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * j00 + vkq * j10;
          v(k, q) = vkp * j01 + vkq * j11;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });
  EigenResult out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto src = order[static_cast<std::size_t>(i)];
    out.values(i) = a(src, src).real();
    out.vectors.col(i) = v.col(src);
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) { return hermitian_eig(a).values; }

double min_eigenvalue(const ComplexMatrix& a) {
  if (a.rows() == 0) return 0.0;
  return hermitian_eig(a).values(0);
}

namespace {

ComplexMatrix transpose_parties(const ComplexMatrix& a, const StateSpace& space,
                                const std::vector<bool>& flip) {
  const int dim = space.total();
  if (a.rows() != dim || a.cols() != dim)
    throw Error(ErrorCode::DimensionMismatch,
                "operator is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    ", space " + space.to_string() + " needs " + std::to_string(dim));
  ComplexMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto di = space.digits(i);
    for (int j = 0; j < dim; ++j) {
      auto ri = di;
      auto rj = space.digits(j);
      for (std::size_t k = 0; k < flip.size(); ++k)
        if (flip[k]) std::swap(ri[k], rj[k]);
      out(space.index(ri), space.index(rj)) = a(i, j);
    }
  }
  return out;
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& a, const StateSpace& space, int party) {
  if (party < 0 || party >= space.parties())
    throw Error(ErrorCode::DimensionMismatch, "party index out of range");
  std::vector<bool> flip(static_cast<std::size_t>(space.parties()), false);
  flip[static_cast<std::size_t>(party)] = true;
  return transpose_parties(a, space, flip);
}

ComplexMatrix partial_transpose(const ComplexMatrix& a, const StateSpace& space,
                                const std::vector<int>& parties) {
  std::vector<bool> flip(static_cast<std::size_t>(space.parties()), false);
  for (int p : parties) {
    if (p < 0 || p >= space.parties())
      throw Error(ErrorCode::DimensionMismatch, "party index out of range");
    flip[static_cast<std::size_t>(p)] = true;
  }
  return transpose_parties(a, space, flip);
}

PsdCheck psd_check(const ComplexMatrix& a, double tol) {
  const double lo = min_eigenvalue(a);
  return PsdCheck{lo >= -tol, lo};
}

ComplexMatrix project_psd(const ComplexMatrix& a) {
  const auto eig = hermitian_eig(a);
  ComplexMatrix out = ComplexMatrix::Zero(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > 0.0) out.noalias() += eig.values(i) * eig.vectors.col(i) * eig.vectors.col(i).adjoint();
  }
  return out;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix projector(const std::vector<ComplexVector>& orthonormal) {
  if (orthonormal.empty()) return ComplexMatrix();
  const auto n = orthonormal.front().size();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& v : orthonormal) out.noalias() += v * v.adjoint();
  return out;
}

std::vector<ComplexVector> complete_orthonormal(const std::vector<ComplexVector>& basis, int dim) {
  std::vector<ComplexVector> current = basis;
  std::vector<ComplexVector> added;
  const auto residual = [&](int idx) {
    ComplexVector r = ComplexVector::Unit(dim, idx);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : current) r -= q * q.dot(r);
    return r;
  };
  while (static_cast<int>(current.size()) < dim) {
    int best = -1;
    double best_norm = -1.0;
    for (int i = 0; i < dim; ++i) {
      const double nr = residual(i).norm();
      if (nr > best_norm + 1e-12) {
        best = i;
        best_norm = nr;
      }
    }
    if (best_norm < 1e-8) throw Error(ErrorCode::NotIndependent, "basis completion lost rank");
    ComplexVector r = residual(best);
    r /= r.norm();
    current.push_back(r);
    added.push_back(r);
  }
  return added;
}

std::vector<ComplexVector> orthonormal_span(const std::vector<ComplexVector>& vectors,
                                            double rel_tol) {
  std::vector<ComplexVector> out;
  if (vectors.empty()) return out;
  ComplexMatrix m(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return out;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) out.push_back(svd.matrixU().col(i));
  return out;
}

RealVector singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

int numerical_rank(const ComplexMatrix& a, double rel_tol) {
  const auto s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

}  // namespace sepdisc
