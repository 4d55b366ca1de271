#include <gtest/gtest.h>

#include "sepdisc/constructions.hpp"
#include "sepdisc/discrimination.hpp"
#include "sepdisc/error.hpp"
#include "sepdisc/random.hpp"
#include "sepdisc/separability.hpp"
#include "test_util.hpp"

using namespace sepdisc;
using namespace sepdisc::test;

namespace {

void expect_valid_certificate(const Verdict& v, const DiscriminationInstance& inst) {
  ASSERT_TRUE(v.certificate);
  const auto chk = verify_certificate(*v.certificate, inst.space, inst.densities());
  EXPECT_TRUE(chk.ok()) << chk.detail;
}

PureState prefixed(int bit, const PureState& core) {
  ComplexVector e = ComplexVector::Zero(2);
  e(bit) = 1;
  return PureState(StateSpace{2, 2, 2}, kron(e, core.amplitudes()));
}

PureState mix(const PureState& a, const PureState& b, double sign) {
  return PureState::normalized(a.space(), a.amplitudes() + sign * b.amplitudes());
}

const double kAlpha = kPi / 8, kBeta = kPi / 6;

BasisInstance family_mid() {
  const auto [lo, hi] = family_gamma_range(kAlpha, kBeta);
  return family_sep_not_locc({kAlpha, kBeta, 0.5 * (lo + hi)});
}

}  // namespace

TEST(Decide, StandardBasis) {
  std::vector<PureState> b;
  for (int i = 0; i < 4; ++i) b.push_back(PureState::basis(qubits2(), qubits2().digits(i)));
  const auto inst = DiscriminationInstance::pure(b);
  const auto v = decide(inst);
  EXPECT_EQ(v.status, Status::Distinguishable);
  EXPECT_EQ(v.tag, TheoremTag::T1);
  expect_valid_certificate(v, inst);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_LT(max_abs(v.certificate->elements[k] - b[k].density()), 1e-12);
}

TEST(Decide, BellBasis) {
  const auto v = decide(DiscriminationInstance::pure({phi_plus(), phi_minus(), psi_plus(), psi_minus()}));
  EXPECT_EQ(v.status, Status::Indistinguishable);
  EXPECT_EQ(v.tag, TheoremTag::T1);
  EXPECT_FALSE(v.certificate);
}

TEST(Decide, ThreeProductsAndOneMore) {
  const StateSpace s{2, 2, 2};
  const std::vector<PureState> b{PureState::basis(s, {0, 0, 0}), PureState::basis(s, {0, 1, 1}),
                                 PureState::basis(s, {1, 0, 1}),
                                 ket(s, {{{0, 0, 1}, 1}, {{1, 1, 0}, 1}})};
  const auto inst = DiscriminationInstance::pure(b);
  const auto v = decide(inst);
  EXPECT_EQ(v.status, Status::Distinguishable);
  expect_valid_certificate(v, inst);
}

TEST(Decide, FullBasesRandom) {
  Rng rng(3);
  for (const StateSpace& s : {StateSpace{2, 2}, StateSpace{3, 3}}) {
    for (int i = 0; i < 5; ++i) {
      const auto pb = random_product_basis(s, rng);
      const auto inst = DiscriminationInstance::pure(pb);
      const auto v = decide(inst);
      EXPECT_EQ(v.status, Status::Distinguishable);
      expect_valid_certificate(v, inst);
      auto mixed = pb;
      mixed[0] = mix(pb[0], pb.back(), 1.0);
      mixed.back() = mix(pb[0], pb.back(), -1.0);
      const bool entangled = !is_product(mixed[0]) || !is_product(mixed.back());
      EXPECT_EQ(decide(DiscriminationInstance::pure(mixed)).status,
                entangled ? Status::Indistinguishable : Status::Distinguishable);
    }
  }
}

TEST(Decide, ValidatesInstances) {
  try {
    decide(DiscriminationInstance::pure({phi_plus(), phi_plus()}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInstance);
  }
  try {
    decide(DiscriminationInstance::pure({phi_minus(), psi_plus(), psi_minus()}, psi_plus()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInstance);
  }
}

TEST(TwoQubit, FamilyIsSeparableNotLocc) {
  const auto f = family_mid();
  const auto v = decide_2x2_basis(f.phi, f.basis);
  EXPECT_EQ(v.status, Status::Distinguishable);
  EXPECT_EQ(v.tag, TheoremTag::T2);
  EXPECT_EQ(v.locc_flag, LoccFlag::LoccIndistinguishable);
  const auto inst = DiscriminationInstance::pure(f.basis, f.phi);
  expect_valid_certificate(v, inst);
  ASSERT_TRUE(v.certificate->lambdas);
  const double cphi = concurrence(f.phi);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR((*v.certificate->lambdas)[k], concurrence(f.basis[k]) / cphi, 1e-9);
  const auto routed = decide(inst);
  EXPECT_EQ(routed.status, Status::Distinguishable);
  EXPECT_EQ(routed.tag, TheoremTag::T2);
}

TEST(TwoQubit, BellTriple) {
  const auto v = decide_2x2_basis(phi_plus(), {phi_minus(), psi_plus(), psi_minus()});
  EXPECT_EQ(v.status, Status::Indistinguishable);
  EXPECT_NE(v.reason.find("concurrence sum 3"), std::string::npos) << v.reason;
}

TEST(TwoQubit, UnitConcurrenceMember) {
  const auto& q = qubits2();
  const auto v = decide_2x2_basis(phi_plus(), {phi_minus(), PureState::basis(q, {0, 1}), PureState::basis(q, {1, 0})});
  EXPECT_EQ(v.status, Status::Distinguishable);
  ASSERT_TRUE(v.certificate && v.certificate->lambdas);
  EXPECT_NEAR((*v.certificate->lambdas)[0], 1.0, 1e-12);
  EXPECT_NEAR((*v.certificate->lambdas)[1], 0.0, 1e-12);
  EXPECT_NEAR((*v.certificate->lambdas)[2], 0.0, 1e-12);
  EXPECT_EQ(v.locc_flag, LoccFlag::Unknown);
}

TEST(TwoQubit, ProductPhiRejected) {
  const auto& q = qubits2();
  try {
    decide_2x2_basis(PureState::basis(q, {0, 0}),
                     {PureState::basis(q, {0, 1}), PureState::basis(q, {1, 0}), PureState::basis(q, {1, 1})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PhiProduct);
  }
}

TEST(TwoQubit, LambdaUniqueness) {
  // perturbing any weight by 1e-3 breaks separability of that element
  Rng rng(8);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int i = 0; i < 20; ++i) {
    const double b = u(rng) * kPi / 4, a = b * u(rng);
    const auto [lo, hi] = family_gamma_range(a, b);
    const auto f = family_sep_not_locc({a, b, lo + (hi - lo) * u(rng)});
    const auto v = decide_2x2_basis(f.phi, f.basis);
    ASSERT_EQ(v.status, Status::Distinguishable);
    const auto& l = *v.certificate->lambdas;
    for (std::size_t k = 0; k < 3; ++k)
      for (double d : {-1e-3, 1e-3}) {
        if (l[k] + d < 0) continue;
        EXPECT_EQ(rank2_separability(f.basis[k], f.phi, l[k] + d).verdict.status, SeparabilityStatus::Entangled);
      }
  }
}

TEST(MaxEnt, Examples) {
  const auto third = basis_from_unitary(tetra_unitary({1.0 / 3, 1.0 / 3, 1.0 / 3}));
  EXPECT_EQ(decide_max_ent_basis(third.basis).status, Status::Distinguishable);
  EXPECT_EQ(decide_max_ent_basis(third.basis).tag, TheoremTag::C2);
  const auto corner = basis_from_unitary(tetra_unitary({1, 0, 0}));
  EXPECT_EQ(decide_max_ent_basis(corner.basis).status, Status::Distinguishable);
  const auto all = basis_from_unitary(ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(decide_max_ent_basis(all.basis).status, Status::Indistinguishable);
  try {
    const auto f = family_mid();
    decide_max_ent_basis(f.basis);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMaxEnt);
  }
}

TEST(MaxEnt, ProductMembersOnly) {
  // {Phi+}^perp holds no three orthogonal product states; the closest is
  // a sum-zero triple, which the decider cannot accept either way
  const auto z = basis_for_targets(0, 0, 0);
  try {
    decide_max_ent_basis(z.basis);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMaxEnt);
  }
}

TEST(Multipartite, PrefixedFamily) {
  const auto f = family_mid();
  const PureState phi = prefixed(0, f.phi);
  std::vector<PureState> basis;
  for (const auto& b : f.basis) basis.push_back(prefixed(0, b));
  for (int i = 0; i < 4; ++i) basis.push_back(PureState::basis(StateSpace{2, 2, 2}, {1, i / 2, i % 2}));
  const auto v = decide_multipartite_sch2(phi, basis);
  EXPECT_EQ(v.status, Status::Distinguishable);
  EXPECT_EQ(v.tag, TheoremTag::T4);
  expect_valid_certificate(v, DiscriminationInstance::pure(basis, phi));
  EXPECT_EQ(decide(DiscriminationInstance::pure(basis, phi)).status, Status::Distinguishable);

  // Bell basis in the other prefix block
  auto wrong = basis;
  wrong[3] = prefixed(1, phi_plus());
  wrong[4] = prefixed(1, phi_minus());
  wrong[5] = prefixed(1, psi_plus());
  wrong[6] = prefixed(1, psi_minus());
  EXPECT_EQ(decide_multipartite_sch2(phi, wrong).status, Status::Indistinguishable);

  // entangled member outside the embedding
  auto outside = basis;
  outside[0] = mix(basis[0], basis[3], 1.0);
  outside[3] = mix(basis[0], basis[3], -1.0);
  EXPECT_EQ(decide_multipartite_sch2(phi, outside).status, Status::Indistinguishable);
}

TEST(Multipartite, WrongForm) {
  try {
    decide_multipartite_sch2(w_state(), orthocomplement_basis(w_state()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongForm);
  }
}

TEST(EntryDistance3, GhzExamples) {
  const StateSpace s{2, 2, 2};
  for (double t : {0.2, kPi / 6, kPi / 4, 1.0, 1.3}) {
    const PureState g = ghz(t);
    const PureState ent = ket(s, {{{0, 0, 0}, std::sin(t)}, {{1, 1, 1}, -std::cos(t)}});
    std::vector<PureState> basis{ent};
    for (int i = 1; i < 7; ++i) basis.push_back(PureState::basis(s, s.digits(i)));
    const auto v = decide_h3(g, basis);
    EXPECT_EQ(v.status, Status::Distinguishable) << v.reason;
    EXPECT_EQ(v.tag, TheoremTag::T5);
    expect_valid_certificate(v, DiscriminationInstance::pure(basis, g));

    auto two = basis;
    two[0] = mix(ent, basis[1], 1.0);
    two[1] = mix(ent, basis[1], -1.0);
    EXPECT_EQ(decide_h3(g, two).status, Status::Indistinguishable);

    auto companion = basis;  // |001> and |110> mixed: entangled companion
    companion[1] = mix(basis[1], basis[6], 1.0);
    companion[6] = mix(basis[1], basis[6], -1.0);
    EXPECT_EQ(decide_h3(g, companion).status, Status::Indistinguishable);
  }
}

TEST(Subspaces, Trichotomy) {
  EXPECT_EQ(subspace_verdict(w_state()).answer, SubspaceAnswer::NoDistinguishableBasis);
  for (double t : {0.2, kPi / 6, kPi / 4, 1.0, 1.3}) {
    const auto sv = subspace_verdict(ghz(t));
    ASSERT_EQ(sv.answer, SubspaceAnswer::HasLoccBasis);
    EXPECT_EQ(decide_h3(ghz(t), sv.basis).status, Status::Distinguishable);
  }
  for (double r : {0.2, 0.5, 1.0, 2.0, 5.0})
    EXPECT_EQ(subspace_verdict(zero_plus(1.0, r)).answer, SubspaceAnswer::NoDistinguishableBasis) << r;
  try {
    subspace_verdict(PureState::basis(qubits2(), {0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PhiProduct);
  }
}

TEST(Decide, ComplementRoutes) {
  // W: no basis of the complement works
  const auto w = decide(DiscriminationInstance::pure(orthocomplement_basis(w_state()), w_state()));
  EXPECT_EQ(w.status, Status::Indistinguishable);
  EXPECT_EQ(w.tag, TheoremTag::T6);
  // product phi: product-basis rule
  const StateSpace s{2, 3};
  Rng rng(4);
  const auto pb = random_product_basis(s, rng);
  const std::vector<PureState> rest(pb.begin() + 1, pb.end());
  const auto p = decide(DiscriminationInstance::pure(rest, pb[0]));
  EXPECT_EQ(p.status, Status::Distinguishable);
}

TEST(Decide, TwoDimensionalComplementCarriesReport) {
  const auto spec = indistinguishable_subspace(SubspaceKind::Bipartite3x3Dim7);
  const auto v = decide(DiscriminationInstance::pure(spec.complement));
  EXPECT_NE(v.status, Status::Distinguishable);
  EXPECT_EQ(v.tag, TheoremTag::T8);
  ASSERT_TRUE(v.subspace);
  EXPECT_TRUE(v.subspace->all_pass());
  ASSERT_TRUE(v.feasibility);
  EXPECT_GT(v.feasibility->residual, 1e-4);
}

TEST(Decide, MixedProjectors) {
  const auto& q = qubits2();
  // {|00>,|01>} and {|10>,|11>}: separable blocks
  const ComplexMatrix a = PureState::basis(q, {0, 0}).density() + PureState::basis(q, {0, 1}).density();
  const ComplexMatrix b = PureState::basis(q, {1, 0}).density() + PureState::basis(q, {1, 1}).density();
  const auto inst = DiscriminationInstance::mixed(q, {a, b});
  const auto v = decide(inst);
  EXPECT_EQ(v.status, Status::Distinguishable);
  expect_valid_certificate(v, inst);
  // a single Bell projector against its complement
  const auto e = decide(DiscriminationInstance::mixed(q, {phi_plus().density(), ComplexMatrix::Identity(4, 4) - phi_plus().density()}));
  EXPECT_EQ(e.status, Status::Indistinguishable);
}

TEST(Decide, FeasibilityRouteAgrees) {
  const auto f = family_mid();
  const auto inst = DiscriminationInstance::pure(f.basis, f.phi);
  const auto v = decide_by_feasibility(inst);
  EXPECT_EQ(v.status, Status::Distinguishable);
  expect_valid_certificate(v, inst);
  const auto bell = decide_by_feasibility(DiscriminationInstance::pure({phi_minus(), psi_plus(), psi_minus()}, phi_plus()));
  EXPECT_NE(bell.status, Status::Distinguishable);
  ASSERT_TRUE(bell.feasibility);
  EXPECT_TRUE(bell.feasibility->stalled);
}

TEST(Strings, Stable) {
  EXPECT_EQ(to_string(Status::Distinguishable), "distinguishable");
  EXPECT_EQ(to_string(Status::Indistinguishable), "indistinguishable");
  EXPECT_EQ(to_string(Status::Undecided), "undecided");
  EXPECT_EQ(to_string(TheoremTag::C2), "C2");
  EXPECT_EQ(to_string(SubspaceAnswer::HasLoccBasis), "has_locc_basis");
}
