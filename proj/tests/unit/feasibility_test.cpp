#include <gtest/gtest.h>

#include "sepdisc/constructions.hpp"
#include "sepdisc/error.hpp"
#include "sepdisc/feasibility.hpp"
#include "sepdisc/random.hpp"
#include "test_util.hpp"

using namespace sepdisc;
using namespace sepdisc::test;

namespace {

std::vector<ComplexMatrix> projectors_of(const std::vector<PureState>& s) {
  std::vector<ComplexMatrix> p;
  for (const auto& x : s) p.push_back(x.density());
  return p;
}

}  // namespace

TEST(Feasibility, ProductProjectorAllButOne) {
  const StateSpace s{2, 2};
  ComplexMatrix p1 = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 3; ++i) p1(i, i) = 1;
  const auto fp = FeasibilityProblem::from_projectors(s, {p1});
  EXPECT_LT(max_abs(fp.residual - PureState::basis(s, {1, 1}).density()), 1e-12);
  const auto r = feasibility_solve(fp);
  EXPECT_TRUE(r.feasible);
  ASSERT_EQ(r.operators.size(), 1u);
  EXPECT_LT(max_abs(r.operators[0] - fp.residual), 1e-8);
  EXPECT_TRUE(r.exact);
}

TEST(Feasibility, BellTripleStalls) {
  const auto fp = FeasibilityProblem::from_projectors(qubits2(), projectors_of({phi_minus(), psi_plus(), psi_minus()}));
  const auto r = feasibility_solve(fp);
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(r.diagnostics.stalled);
  EXPECT_GT(r.diagnostics.residual, 1e-4);
  EXPECT_LT(r.diagnostics.iterations, fp.max_iterations);
}

TEST(Feasibility, UnitConcurrenceMember) {
  const auto& q = qubits2();
  const auto fp = FeasibilityProblem::from_projectors(
      q, projectors_of({phi_minus(), PureState::basis(q, {0, 1}), PureState::basis(q, {1, 0})}));
  const auto r = feasibility_solve(fp);
  ASSERT_TRUE(r.feasible);
  EXPECT_LT(r.diagnostics.residual, 1e-7);
  EXPECT_LT(max_abs(r.operators[0] - phi_plus().density()), 1e-6);
  EXPECT_LT(max_abs(r.operators[1]), 1e-6);
  EXPECT_LT(max_abs(r.operators[2]), 1e-6);
}

TEST(Feasibility, DykstraPath) {
  // family instance with the direct solve switched off
  const double a = kPi / 8, b = kPi / 6;
  const auto [lo, hi] = family_gamma_range(a, b);
  const auto f = family_sep_not_locc({a, b, 0.5 * (lo + hi)});
  auto fp = FeasibilityProblem::from_projectors(f.phi.space(), projectors_of(f.basis));
  fp.try_scalar = false;
  const auto r = feasibility_solve(fp);
  EXPECT_TRUE(r.feasible) << r.diagnostics.residual;
  EXPECT_FALSE(r.diagnostics.scalar_reduction);
  EXPECT_GT(r.diagnostics.iterations, 0);
  ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
  for (const auto& e : r.operators) {
    sum += e;
    EXPECT_GE(min_eigenvalue(e), -1e-7);
  }
  EXPECT_LT((sum - fp.residual).norm(), 1e-7);
  fp.try_scalar = true;
  const auto direct = feasibility_solve(fp);
  EXPECT_TRUE(direct.diagnostics.scalar_reduction);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_LT(max_abs(direct.operators[k] - r.operators[k]), 1e-4);
}

TEST(Feasibility, InvalidProjectors) {
  const auto& q = qubits2();
  try {
    FeasibilityProblem::from_projectors(q, {phi_plus().density(), phi_plus().density()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInstance);
  }
  try {
    FeasibilityProblem::from_projectors(q, {2.0 * phi_plus().density()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInstance);
  }
}

TEST(Feasibility, DefaultCuts) {
  EXPECT_EQ(FeasibilityProblem::from_projectors(qubits2(), {phi_plus().density()}).cuts.size(), 1u);
  const StateSpace s{2, 2, 2};
  const auto fp = FeasibilityProblem::from_projectors(s, {w_state().density()});
  EXPECT_EQ(fp.cuts.size(), 3u);
}
