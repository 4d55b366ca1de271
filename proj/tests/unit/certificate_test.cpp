#include <gtest/gtest.h>

#include "sepdisc/certificate.hpp"
#include "sepdisc/constructions.hpp"
#include "sepdisc/discrimination.hpp"
#include "sepdisc/error.hpp"
#include "test_util.hpp"

using namespace sepdisc;
using namespace sepdisc::test;

namespace {

ComplexVector e(int i) {
  ComplexVector v = ComplexVector::Zero(2);
  v(i) = 1;
  return v;
}

ProductDecomposition product_output(int a, int b) {
  ProductDecomposition d;
  d.terms.push_back({1.0, ProductVector{{e(a), e(b)}}});
  return d;
}

struct Fixture {
  BasisInstance f;
  DiscriminationInstance inst;
  Verdict v;
};

Fixture family() {
  const double a = kPi / 8, b = kPi / 6;
  const auto [lo, hi] = family_gamma_range(a, b);
  Fixture x{family_sep_not_locc({a, b, 0.5 * (lo + hi)}), {}, {}};
  x.inst = DiscriminationInstance::pure(x.f.basis, x.f.phi);
  x.v = decide(x.inst);
  return x;
}

}  // namespace

TEST(VerifyCertificate, AcceptsDecisions) {
  const auto x = family();
  ASSERT_TRUE(x.v.certificate);
  const auto c = verify_certificate(*x.v.certificate, x.inst.space, x.inst.densities());
  EXPECT_TRUE(c.ok()) << c.detail;
  EXPECT_LT(c.completeness_error, 1e-9);
  EXPECT_LT(c.correctness_error, 1e-9);
  EXPECT_FALSE(x.v.certificate->relaxed);
}

TEST(VerifyCertificate, RejectsTampering) {
  const auto x = family();
  auto bad = *x.v.certificate;
  bad.elements[0] *= 0.9;
  auto c = verify_certificate(bad, x.inst.space, x.inst.densities());
  EXPECT_FALSE(c.complete);
  EXPECT_FALSE(c.ok());

  bad = *x.v.certificate;
  std::swap(bad.elements[0], bad.elements[1]);
  std::swap(bad.evidence[0], bad.evidence[1]);
  c = verify_certificate(bad, x.inst.space, x.inst.densities());
  EXPECT_FALSE(c.correct);

  bad = *x.v.certificate;
  bad.lambdas = std::vector<double>{0.5, 0.5, 0.5};
  EXPECT_FALSE(verify_certificate(bad, x.inst.space, x.inst.densities()).lambdas_ok);

  bad = *x.v.certificate;
  bad.evidence.pop_back();
  c = verify_certificate(bad, x.inst.space, x.inst.densities());
  EXPECT_FALSE(c.ok());
  EXPECT_FALSE(c.detail.empty());
}

TEST(VerifyCertificate, EntangledEvidenceFails) {
  // the Bell projectors sum to I and discriminate, but are not separable
  const std::vector<PureState> bell{phi_plus(), phi_minus(), psi_plus(), psi_minus()};
  PovmCertificate cert;
  std::vector<ComplexMatrix> rho;
  for (const auto& s : bell) {
    cert.elements.push_back(s.density());
    cert.evidence.push_back(make_ppt_record(s.density(), qubits2(), {{1}}));
    rho.push_back(s.density());
  }
  const auto c = verify_certificate(cert, qubits2(), rho);
  EXPECT_TRUE(c.complete);
  EXPECT_TRUE(c.correct);
  EXPECT_TRUE(c.positive);
  EXPECT_FALSE(c.evidence_ok);
  EXPECT_NEAR(c.evidence_error, 0.5, 1e-12);
}

TEST(PptRecord, Fields) {
  const ComplexMatrix m = PureState::basis(qubits2(), {0, 1}).density();
  const auto r = make_ppt_record(m, qubits2(), {{1}});
  EXPECT_NEAR(r.min_eigenvalue, 0.0, 1e-12);
  EXPECT_NEAR(r.min_pt_eigenvalue, 0.0, 1e-12);
  EXPECT_TRUE(r.exact);
  EXPECT_FALSE(make_ppt_record(ComplexMatrix::Identity(9, 9), StateSpace{3, 3}, {{1}}).exact);
}

TEST(SeparableOperation, ReadsOutTheState) {
  const auto x = family();
  std::vector<ProductDecomposition> out{product_output(0, 0), product_output(0, 1), product_output(1, 0)};
  const auto op = build_separable_operation(*x.v.certificate, out);
  EXPECT_EQ(op.outcomes(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto p = op.probabilities(x.f.basis[k].density());
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(p[j], k == j ? 1.0 : 0.0, 1e-9);
    EXPECT_LT(max_abs(op.apply(x.f.basis[k].density()) - out[k].assemble()), 1e-9);
  }
  // product Kraus operators reproduce the channel and preserve trace
  ASSERT_FALSE(op.kraus().empty());
  ComplexMatrix tp = ComplexMatrix::Zero(4, 4);
  for (const auto& k : op.kraus()) tp += k.adjoint() * k;
  EXPECT_LT(max_abs(tp - ComplexMatrix::Identity(4, 4)), 1e-9);
  const ComplexMatrix rho = x.f.phi.density();
  ComplexMatrix via = ComplexMatrix::Zero(4, 4);
  for (const auto& k : op.kraus()) via += k * rho * k.adjoint();
  EXPECT_LT(max_abs(via - op.apply(rho)), 1e-9);
  EXPECT_NEAR(op.apply(rho).trace().real(), 1.0, 1e-9);
}

TEST(SeparableOperation, Preconditions) {
  const auto x = family();
  try {
    build_separable_operation(*x.v.certificate, {product_output(0, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CountMismatch);
  }
  auto half = product_output(0, 0);
  half.terms[0].weight = 0.5;
  try {
    build_separable_operation(*x.v.certificate, {half, product_output(0, 1), product_output(1, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

TEST(SeparableOperation, PptOnlyHasNoKraus) {
  PovmCertificate cert;
  for (int i = 0; i < 4; ++i) {
    const ComplexMatrix m = PureState::basis(qubits2(), qubits2().digits(i)).density();
    cert.elements.push_back(m);
    cert.evidence.push_back(make_ppt_record(m, qubits2(), {{1}}));
  }
  const auto op = build_separable_operation(
      cert, {product_output(0, 0), product_output(0, 1), product_output(1, 0), product_output(1, 1)});
  EXPECT_TRUE(op.kraus().empty());
  EXPECT_NEAR(op.probabilities(PureState::basis(qubits2(), {1, 0}).density())[2], 1.0, 1e-12);
}
