#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sepdisc/linalg.hpp"
#include "sepdisc/separability.hpp"
#include "sepdisc/space.hpp"

namespace sepdisc {

/// Evidence that an element passed the PPT relaxation.
struct PptRecord {
  std::vector<std::vector<int>> cuts;
  double min_eigenvalue = 0.0;     // of the element itself
  double min_pt_eigenvalue = 0.0;  // over all cuts
  bool exact = false;              // PPT is equivalent to separability in this space
};

using ElementEvidence = std::variant<ProductDecomposition, PptRecord>;

struct PovmCertificate {
  std::vector<ComplexMatrix> elements;
  std::vector<ElementEvidence> evidence;     // one per element
  std::optional<std::vector<double>> lambdas;
  // Some evidence is PPT-only in a space where PPT does not imply separability.
  bool relaxed = false;
};

PptRecord make_ppt_record(const ComplexMatrix& element, const StateSpace& space,
                          const std::vector<std::vector<int>>& cuts);

struct CertificateCheck {
  double completeness_error = 0.0;  // max |sum Pi - I|
  double correctness_error = 0.0;   // max |tr(Pi_k rho_j) - delta_kj|
  double min_eigenvalue = 0.0;      // over all elements
  double evidence_error = 0.0;      // worst reassembly error or PPT violation
  bool lambdas_ok = true;
  bool complete = false;
  bool correct = false;
  bool positive = false;
  bool evidence_ok = false;
  std::string detail;

  bool ok() const { return complete && correct && positive && evidence_ok && lambdas_ok; }
};

/// Independent re-check of a certificate against the states it claims to
/// discriminate (density matrices of unit trace).
CertificateCheck verify_certificate(const PovmCertificate& cert, const StateSpace& space,
                                    const std::vector<ComplexMatrix>& states);

/// rho -> sum_k tr(Pi_k rho) sigma_k.
class SeparableOperation {
 public:
  SeparableOperation(std::vector<ComplexMatrix> elements, std::vector<ComplexMatrix> outputs,
                     std::vector<ComplexMatrix> kraus);

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  std::vector<double> probabilities(const ComplexMatrix& rho) const;
  std::size_t outcomes() const { return elements_.size(); }
  /// Product Kraus operators sqrt(w u) |s><v| built from the product
  /// decompositions of Pi_k and sigma_k; empty when some element only has
  /// PPT evidence.
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

 private:
  std::vector<ComplexMatrix> elements_;
  std::vector<ComplexMatrix> outputs_;
  std::vector<ComplexMatrix> kraus_;
};

/// Throws CountMismatch when the output count differs from the element
/// count, PreconditionViolated when an output does not have unit trace.
SeparableOperation build_separable_operation(const PovmCertificate& povm,
                                             const std::vector<ProductDecomposition>& outputs);

}  // namespace sepdisc
