#include "sepdisc/separability.hpp"

#include <cmath>
#include <limits>

#include "sepdisc/config.hpp"
#include "sepdisc/error.hpp"

namespace sepdisc {

ComplexMatrix ProductDecomposition::assemble() const {
  if (terms.empty()) return ComplexMatrix();
  ComplexVector v0 = terms.front().vector.assemble();
  ComplexMatrix out = ComplexMatrix::Zero(v0.size(), v0.size());
  for (const auto& t : terms) {
    ComplexVector v = t.vector.assemble();
    v /= v.norm();
    out += t.weight * (v * v.adjoint());
  }
  return out;
}

double ProductDecomposition::reassembly_error(const ComplexMatrix& target) const {
  const ComplexMatrix m = assemble();
  if (m.rows() != target.rows() || m.cols() != target.cols()) return std::numeric_limits<double>::infinity();
  return (m - target).norm() / std::max(1.0, target.norm());
}

std::string_view to_string(SeparabilityStatus s) {
  switch (s) {
    case SeparabilityStatus::Separable: return "separable";
    case SeparabilityStatus::Entangled: return "entangled";
    case SeparabilityStatus::Undecided: return "undecided";
  }
  return "?";
}

std::string_view to_string(Rank2Case c) {
  switch (c) {
    case Rank2Case::BothProduct: return "i";
    case Rank2Case::ProductWithZeroWeight: return "ii";
    case Rank2Case::ProductPair: return "iii";
    case Rank2Case::Entangled: return "entangled";
  }
  return "?";
}

ComplexMatrix support_projector(const ComplexMatrix& rho, double tol) {
  const EigenResult er = hermitian_eig(rho);
  ComplexMatrix p = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (Eigen::Index i = 0; i < er.values.size(); ++i) {
    if (er.values(i) > tol) p += er.vectors.col(i) * er.vectors.col(i).adjoint();
  }
  return p;
}

Lemma1Result lemma1_check(const ComplexMatrix& e, const ComplexMatrix& rho) {
  if (e.rows() != e.cols() || rho.rows() != rho.cols() || e.rows() != rho.rows())
    throw Error(ErrorCode::DimensionMismatch, "E and rho must be square of equal size");
  const auto& tol = tolerances();
  const double e_min = min_eigenvalue(e);
  const double e_max = -min_eigenvalue(-e);
  if (e_min < -tol.psd || e_max > 1.0 + tol.psd)
    throw Error(ErrorCode::PreconditionViolated, "E must satisfy 0 <= E <= I");
  if (min_eigenvalue(rho) < -tol.psd) throw Error(ErrorCode::NotPSD, "rho is not positive semidefinite");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-8) throw Error(ErrorCode::PreconditionViolated, "rho must have unit trace");

  Lemma1Result r;
  const ComplexMatrix p = support_projector(rho, tol.rank);
  r.trace = (e * rho).trace().real();
  r.min_eig_difference = min_eigenvalue(e - p);
  r.trace_is_one = std::abs(r.trace - 1.0) <= 1e-8;
  r.dominates = r.min_eig_difference >= -1e-8;
  if (r.trace_is_one && r.dominates) {
    r.outcome = Lemma1Outcome::HoldsBothWays;
  } else if (!r.trace_is_one && !r.dominates) {
    r.outcome = Lemma1Outcome::Violation;
    r.detail = "tr(E rho) = " + std::to_string(r.trace) + " and E - P has eigenvalue " +
               std::to_string(r.min_eig_difference);
  } else {
    r.outcome = Lemma1Outcome::Inconsistent;
    r.detail = r.trace_is_one ? "trace is one but E - P is not PSD" : "E - P is PSD but trace differs from one";
  }
  return r;
}

namespace {

ProductTerm term_from(const PureState& s, double w) {
  auto pv = factorize(s.amplitudes(), s.space(), tolerances().rank * 10);
  if (!pv) throw Error(ErrorCode::PreconditionViolated, "state is not product");
  pv->weight = 1.0;
  return ProductTerm{w, std::move(*pv)};
}

SeparabilityVerdict entangled(EntanglementWitness::Kind kind, std::string note) {
  SeparabilityVerdict v;
  v.status = SeparabilityStatus::Entangled;
  EntanglementWitness w;
  w.kind = kind;
  w.note = note;
  v.witness = std::move(w);
  v.note = std::move(note);
  return v;
}

}  // namespace

Rank2Result rank2_separability(const PureState& psi, const PureState& phi, double lambda) {
  if (!(psi.space() == phi.space())) throw Error(ErrorCode::DimensionMismatch, "states live in different spaces");
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw Error(ErrorCode::PreconditionViolated, "mixing weight must be finite and nonnegative");
  const auto& tol = tolerances();
  const bool psi_prod = is_product(psi);
  const bool phi_prod = is_product(phi);
  Rank2Result r;

  if (lambda == 0.0) {
    if (psi_prod) {
      r.case_tag = Rank2Case::ProductWithZeroWeight;
      r.verdict.status = SeparabilityStatus::Separable;
      r.verdict.decomposition = ProductDecomposition{{term_from(psi, 1.0)}};
    } else {
      r.verdict = entangled(EntanglementWitness::Kind::SchmidtRank, "pure entangled state");
    }
    return r;
  }
  if (psi_prod && phi_prod) {
    r.case_tag = Rank2Case::BothProduct;
    r.verdict.status = SeparabilityStatus::Separable;
    r.verdict.decomposition = ProductDecomposition{{term_from(psi, 1.0), term_from(phi, lambda)}};
    return r;
  }
  if (psi_prod != phi_prod) {
    r.verdict = entangled(EntanglementWitness::Kind::MixtureWithProduct,
                          "positive mixture of a product and an entangled state");
    return r;
  }

  // Both entangled: need two product vectors a, b in the span with the
  // mixture diagonal in {a, b}.
  const SpanProducts sp = product_vectors_in_span(psi, phi);
  if (sp.infinitely_many || sp.vectors.size() < 2) {
    r.verdict = entangled(EntanglementWitness::Kind::NoProductPair,
                          "span contains " + std::to_string(sp.vectors.size()) + " product vectors");
    return r;
  }
  const ComplexVector a = sp.vectors[0].assemble();
  const ComplexVector b = sp.vectors[1].assemble();
  ComplexMatrix ab(a.size(), 2);
  ab.col(0) = a / a.norm();
  ab.col(1) = b / b.norm();
  const auto qr = ab.colPivHouseholderQr();
  const ComplexVector cp = qr.solve(psi.amplitudes());
  const ComplexVector cf = qr.solve(phi.amplitudes());
  const Complex alpha = cp(0), beta = cp(1), gamma = cf(0), delta = cf(1);
  const Complex den = gamma * std::conj(delta);
  if (std::abs(den) < 1e-14) {
    r.verdict = entangled(EntanglementWitness::Kind::OffDiagonal, "degenerate product pair");
    return r;
  }
  const Complex ls = -alpha * std::conj(beta) / den;
  if (!(ls.real() > 0.0) || std::abs(ls.imag()) > tol.lambda_match * std::max(1.0, std::abs(ls))) {
    r.verdict = entangled(EntanglementWitness::Kind::OffDiagonal,
                          "no positive weight removes the off-diagonal term");
    return r;
  }
  r.lambda_star = ls.real();
  if (std::abs(lambda - ls.real()) > tol.lambda_match * std::max(1.0, ls.real())) {
    r.verdict = entangled(EntanglementWitness::Kind::OffDiagonal,
                          "weight differs from the separable value " + std::to_string(ls.real()));
    return r;
  }
  r.case_tag = Rank2Case::ProductPair;
  ProductDecomposition dec;
  ProductVector va = sp.vectors[0], vb = sp.vectors[1];
  va.weight = 1.0;
  vb.weight = 1.0;
  dec.terms.push_back({std::norm(alpha) + lambda * std::norm(gamma), std::move(va)});
  dec.terms.push_back({std::norm(beta) + lambda * std::norm(delta), std::move(vb)});
  const ComplexMatrix rho = psi.density() + lambda * phi.density();
  if (dec.reassembly_error(rho) > 1e-6) {
    r.verdict.status = SeparabilityStatus::Undecided;
    r.verdict.note = "product pair found but reassembly is inaccurate";
    return r;
  }
  r.verdict.status = SeparabilityStatus::Separable;
  r.verdict.decomposition = std::move(dec);
  return r;
}

AntiparallelResult antiparallel_test(const PureState& psi, const PureState& phi) {
  const ComplexMatrix m_psi = coeff_matrix(psi);
  const ComplexMatrix m_phi = coeff_matrix(phi);
  const auto& tol = tolerances();
  const Complex det_phi = m_phi.determinant();
  if (std::abs(det_phi) <= tol.det_zero) throw Error(ErrorCode::PhiProduct, "phi is a product state");
  const ComplexMatrix x = m_psi * m_phi.inverse();
  const Complex t = x.trace();
  const Complex d = x.determinant();
  const Complex disc = std::sqrt(t * t - 4.0 * d);
  AntiparallelResult r;
  r.mu1 = 0.5 * (t + disc);
  r.mu2 = 0.5 * (t - disc);
  r.lambda_star = std::abs(m_psi.determinant()) / std::abs(det_phi);
  const double a1 = std::abs(r.mu1), a2 = std::abs(r.mu2);
  if (a1 <= tol.concurrence || a2 <= tol.concurrence) {
    r.reason = "psi is a product state";
    return r;
  }
  const Complex c = r.mu1 * std::conj(r.mu2);
  if (c.real() < 0.0 && std::abs(c.imag()) <= tol.antiparallel_angle * a1 * a2) {
    r.pass = true;
  } else {
    r.reason = "eigenvalues of Psi Phi^-1 are not anti-parallel (angle " +
               std::to_string(std::arg(c)) + ")";
  }
  return r;
}

bool ppt_is_exact(const StateSpace& space) { return space.parties() == 2 && space.total() <= 6; }

SeparabilityVerdict ppt_oracle(const ComplexMatrix& rho, const StateSpace& space,
                               const std::vector<int>& transposed) {
  if (rho.rows() != space.total() || rho.cols() != space.total())
    throw Error(ErrorCode::DimensionMismatch, "operator does not match the space");
  const auto cut = normalize_bipartition(space, transposed);
  const auto& tol = tolerances();
  const EigenResult er = hermitian_eig(rho);
  if (er.values(0) < -tol.psd) throw Error(ErrorCode::NotPSD, "operator has eigenvalue " + std::to_string(er.values(0)));

  const EigenResult pt = hermitian_eig(partial_transpose(rho, space, cut));
  if (pt.values(0) < -tol.psd) {
    SeparabilityVerdict v;
    v.status = SeparabilityStatus::Entangled;
    EntanglementWitness w;
    w.kind = EntanglementWitness::Kind::PartialTranspose;
    w.pt_eigenvalue = pt.values(0);
    w.pt_eigenvector = pt.vectors.col(0);
    w.cut = cut;
    w.note = "partial transpose has a negative eigenvalue";
    v.note = w.note;
    v.witness = std::move(w);
    return v;
  }

  const auto n = er.values.size();
  const double top = er.values(n - 1);
  int rank = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (er.values(i) > tol.rank * std::max(1.0, top)) ++rank;
  if (rank == 1 || rank == 2) {
    const PureState e1 = PureState::normalized(space, er.vectors.col(n - 1));
    SeparabilityVerdict v;
    if (rank == 1) {
      v = rank2_separability(e1, e1, 0.0).verdict;
    } else {
      const PureState e2 = PureState::normalized(space, er.vectors.col(n - 2));
      v = rank2_separability(e1, e2, er.values(n - 2) / top).verdict;
    }
    if (v.decomposition)
      for (auto& t : v.decomposition->terms) t.weight *= top;
    if (v.status != SeparabilityStatus::Undecided) return v;
  }

  SeparabilityVerdict v;
  if (ppt_is_exact(space)) {
    v.status = SeparabilityStatus::Separable;
    v.note = "PPT, and PPT is exact in " + space.to_string();
  } else {
    v.status = SeparabilityStatus::Undecided;
    v.note = "PPT across the cut; PPT is not sufficient in " + space.to_string();
  }
  return v;
}

}  // namespace sepdisc
