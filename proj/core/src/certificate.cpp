#include "sepdisc/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sepdisc/error.hpp"

namespace sepdisc {

PptRecord make_ppt_record(const ComplexMatrix& element, const StateSpace& space,
                          const std::vector<std::vector<int>>& cuts) {
  PptRecord r;
  r.cuts = cuts;
  r.min_eigenvalue = min_eigenvalue(element);
  r.min_pt_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& c : cuts) r.min_pt_eigenvalue = std::min(r.min_pt_eigenvalue, min_eigenvalue(partial_transpose(element, space, c)));
  r.exact = ppt_is_exact(space);
  return r;
}

CertificateCheck verify_certificate(const PovmCertificate& cert, const StateSpace& space,
                                    const std::vector<ComplexMatrix>& states) {
  CertificateCheck c;
  const int d = space.total();
  std::ostringstream why;
  if (cert.elements.size() != states.size() || cert.evidence.size() != cert.elements.size()) {
    c.detail = "element, evidence and state counts differ";
    return c;
  }
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  c.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < cert.elements.size(); ++k) {
    const auto& e = cert.elements[k];
    if (e.rows() != d || e.cols() != d) {
      c.detail = "element size mismatch";
      return c;
    }
    sum += e;
    c.min_eigenvalue = std::min(c.min_eigenvalue, min_eigenvalue(e));
    for (std::size_t j = 0; j < states.size(); ++j) {
      const double want = k == j ? 1.0 : 0.0;
      c.correctness_error = std::max(c.correctness_error, std::abs((e * states[j]).trace().real() - want));
    }
    if (const auto* pd = std::get_if<ProductDecomposition>(&cert.evidence[k])) {
      double err = pd->reassembly_error(e);
      for (const auto& t : pd->terms) {
        if (t.weight < -1e-12) err = std::max(err, -t.weight);
        ComplexVector v = t.vector.assemble();
        // each term must really be a product vector
        if (!factorize(v, space, 1e-8)) err = std::max(err, 1.0);
      }
      c.evidence_error = std::max(c.evidence_error, err);
    } else {
      const auto& pr = std::get<PptRecord>(cert.evidence[k]);
      const PptRecord fresh = make_ppt_record(e, space, pr.cuts);
      c.evidence_error = std::max(c.evidence_error, std::max(0.0, -fresh.min_pt_eigenvalue));
      if (pr.cuts.empty()) c.evidence_error = std::max(c.evidence_error, 1.0);
    }
  }
  c.completeness_error = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  c.complete = c.completeness_error <= 1e-8;
  c.correct = c.correctness_error <= 1e-7;
  c.positive = c.min_eigenvalue >= -1e-9;
  c.evidence_ok = c.evidence_error <= 1e-7;
  if (cert.lambdas) {
    double s = 0.0;
    for (double l : *cert.lambdas) {
      if (l < -1e-12) c.lambdas_ok = false;
      s += l;
    }
    if (std::abs(s - 1.0) > 1e-8) c.lambdas_ok = false;
  }
  if (!c.complete) why << "completeness error " << c.completeness_error << "; ";
  if (!c.correct) why << "correctness error " << c.correctness_error << "; ";
  if (!c.positive) why << "element eigenvalue " << c.min_eigenvalue << "; ";
  if (!c.evidence_ok) why << "evidence error " << c.evidence_error << "; ";
  if (!c.lambdas_ok) why << "lambdas do not sum to one; ";
  c.detail = why.str();
  return c;
}

SeparableOperation::SeparableOperation(std::vector<ComplexMatrix> elements, std::vector<ComplexMatrix> outputs,
                                       std::vector<ComplexMatrix> kraus)
    : elements_(std::move(elements)), outputs_(std::move(outputs)), kraus_(std::move(kraus)) {}

std::vector<double> SeparableOperation::probabilities(const ComplexMatrix& rho) const {
  std::vector<double> p;
  for (const auto& e : elements_) p.push_back((e * rho).trace().real());
  return p;
}

ComplexMatrix SeparableOperation::apply(const ComplexMatrix& rho) const {
  const auto p = probabilities(rho);
  ComplexMatrix out = ComplexMatrix::Zero(outputs_.front().rows(), outputs_.front().cols());
  for (std::size_t k = 0; k < p.size(); ++k) out += p[k] * outputs_[k];
  return out;
}

SeparableOperation build_separable_operation(const PovmCertificate& povm,
                                             const std::vector<ProductDecomposition>& outputs) {
  if (outputs.size() != povm.elements.size())
    throw Error(ErrorCode::CountMismatch, "need one output per POVM element (" + std::to_string(outputs.size()) +
                                              " vs " + std::to_string(povm.elements.size()) + ")");
  std::vector<ComplexMatrix> sigma;
  for (const auto& o : outputs) {
    if (o.terms.empty()) throw Error(ErrorCode::PreconditionViolated, "empty output decomposition");
    ComplexMatrix s = o.assemble();
    if (std::abs(s.trace().real() - 1.0) > 1e-8)
      throw Error(ErrorCode::PreconditionViolated, "output state must have unit trace");
    sigma.push_back(std::move(s));
  }
  std::vector<ComplexMatrix> kraus;
  bool product = true;
  for (const auto& ev : povm.evidence)
    if (!std::holds_alternative<ProductDecomposition>(ev)) product = false;
  if (product && povm.evidence.size() == povm.elements.size()) {
    for (std::size_t k = 0; k < povm.elements.size(); ++k) {
      const auto& in = std::get<ProductDecomposition>(povm.evidence[k]);
      for (const auto& ti : in.terms) {
        ComplexVector v = ti.vector.assemble();
        v /= v.norm();
        for (const auto& to : outputs[k].terms) {
          ComplexVector s = to.vector.assemble();
          s /= s.norm();
          kraus.push_back(std::sqrt(std::max(0.0, ti.weight * to.weight)) * (s * v.adjoint()));
        }
      }
    }
  }
  return SeparableOperation(povm.elements, std::move(sigma), std::move(kraus));
}

}  // namespace sepdisc
