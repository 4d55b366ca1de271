#include <benchmark/benchmark.h>

#include "sepdisc/constructions.hpp"
#include "sepdisc/discrimination.hpp"
#include "sepdisc/feasibility.hpp"
#include "sepdisc/random.hpp"
#include "sepdisc/tensor_rank.hpp"

using namespace sepdisc;

namespace {

std::vector<ComplexMatrix> projectors_of(const std::vector<PureState>& states) {
  std::vector<ComplexMatrix> p;
  for (const auto& s : states) p.push_back(s.density());
  return p;
}

}  // namespace

static void BM_hermitian_eig(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const ComplexMatrix u = random_unitary(n, rng);
  const ComplexMatrix a = u * u.adjoint() + u.adjoint();
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_hermitian_eig)->Arg(4)->Arg(8)->Arg(9)->Arg(16)->Arg(27);

static void BM_feasibility_rank_one(benchmark::State& state) {
  const auto f = family_sep_not_locc({0.3, 0.4, 0.78});
  const auto fp = FeasibilityProblem::from_projectors(f.phi.space(), projectors_of(f.basis));
  for (auto _ : state) benchmark::DoNotOptimize(feasibility_solve(fp));
}
BENCHMARK(BM_feasibility_rank_one)->Unit(benchmark::kMicrosecond);

static void BM_feasibility_dykstra(benchmark::State& state) {
  const auto f = family_sep_not_locc({0.3, 0.4, 0.78});
  auto fp = FeasibilityProblem::from_projectors(f.phi.space(), projectors_of(f.basis));
  fp.try_scalar = false;
  for (auto _ : state) benchmark::DoNotOptimize(feasibility_solve(fp));
}
BENCHMARK(BM_feasibility_dykstra)->Unit(benchmark::kMillisecond);

static void BM_feasibility_stall_3x3(benchmark::State& state) {
  const auto spec = indistinguishable_subspace(SubspaceKind::Bipartite3x3Dim7);
  const auto fp = FeasibilityProblem::from_projectors(spec.phi1.space(), projectors_of(spec.complement));
  for (auto _ : state) benchmark::DoNotOptimize(feasibility_solve(fp));
}
BENCHMARK(BM_feasibility_stall_3x3)->Unit(benchmark::kMillisecond);

static void BM_tetra_unitary(benchmark::State& state) {
  const TetraPoint p{0.5, 0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(basis_from_unitary(tetra_unitary(p)));
}
BENCHMARK(BM_tetra_unitary);

static void BM_schmidt2_classify(benchmark::State& state) {
  Rng rng(3);
  const StateSpace s{2, 2, 2};
  const auto a = random_product_state(s, rng), b = random_product_state(s, rng);
  const auto phi = PureState::normalized(s, a.amplitudes() + b.amplitudes());
  for (auto _ : state) benchmark::DoNotOptimize(schmidt2_classify(phi));
}
BENCHMARK(BM_schmidt2_classify)->Unit(benchmark::kMicrosecond);

static void BM_decide_2x2(benchmark::State& state) {
  const auto f = family_sep_not_locc({0.3, 0.4, 0.78});
  for (auto _ : state) benchmark::DoNotOptimize(decide_2x2_basis(f.phi, f.basis));
}
BENCHMARK(BM_decide_2x2)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
