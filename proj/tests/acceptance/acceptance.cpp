// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sepdisc/constructions.hpp"
#include "sepdisc/discrimination.hpp"
#include "sepdisc/random.hpp"
#include "sepdisc/tensor_rank.hpp"
#include "sepdisc_cli/suites.hpp"

using namespace sepdisc;
using namespace sepdisc::cli;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void add(const PropertyResult& p) {
    if (!p.pass()) pass = false;
    detail << p.name << " " << p.samples - p.failures << "/" << p.samples;
    if (!p.note.empty()) detail << " (" << p.note << ")";
    detail << "; ";
  }
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

PureState ket3(const std::vector<std::pair<std::vector<int>, Complex>>& terms) {
  const StateSpace s{2, 2, 2};
  ComplexVector v = ComplexVector::Zero(8);
  for (const auto& [d, c] : terms) v(s.index(d)) += c;
  return PureState::normalized(s, v);
}

Outcome c1() {
  Outcome o;
  Rng rng(1001);
  // every other instance is a fully random basis: 2000 gives 1000 random ones
  o.add(oracle_equivalence(2000, rng));
  return o;
}

Outcome c2() {
  Outcome o;
  o.add(family_identity(20));
  o.add(family_endpoints(20));
  return o;
}

Outcome c3() {
  Outcome o;
  Rng rng(1003);
  o.add(sep_not_locc_witness(100, rng));
  return o;
}

Outcome c4() {
  Outcome o;
  const auto rows = tetra_sweep(0.05);
  o.add(tetra_roundtrip(rows));
  o.add(tetra_verdicts(rows));
  return o;
}

Outcome c5() {
  Outcome o;
  const auto w = subspace_verdict(ket3({{{0, 0, 1}, 1}, {{0, 1, 0}, 1}, {{1, 0, 0}, 1}}));
  o.check(w.answer == SubspaceAnswer::NoDistinguishableBasis, "W gave " + std::string(to_string(w.answer)));
  int n = 1;
  for (double t : {0.15, 0.4, std::numbers::pi / 4, 1.0, 1.4}) {
    const PureState g = ket3({{{0, 0, 0}, std::cos(t)}, {{1, 1, 1}, std::sin(t)}});
    const auto v = subspace_verdict(g);
    ++n;
    o.check(v.answer == SubspaceAnswer::HasLoccBasis, "GHZ theta " + std::to_string(t) + " gave " + std::string(to_string(v.answer)));
    if (v.answer == SubspaceAnswer::HasLoccBasis) {
      const auto h = decide_h3(g, v.basis);
      o.check(h.status == Status::Distinguishable, "GHZ theta " + std::to_string(t) + " basis fails decide_h3: " + h.reason);
    }
  }
  const double r = 1.0 / std::sqrt(8.0);
  for (double ratio : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    std::vector<std::pair<std::vector<int>, Complex>> terms{{{0, 0, 0}, 1.0}};
    for (int i = 0; i < 8; ++i) terms.push_back({{i >> 2, (i >> 1) & 1, i & 1}, ratio * r});
    const auto v = subspace_verdict(ket3(terms));
    ++n;
    o.check(v.answer == SubspaceAnswer::NoDistinguishableBasis,
            "zero_plus ratio " + std::to_string(ratio) + " gave " + std::string(to_string(v.answer)));
  }
  o.detail << n << " states classified";
  return o;
}

Outcome c6() {
  Outcome o;
  Rng rng(1006);
  for (auto kind : {SubspaceKind::Bipartite3x3Dim7, SubspaceKind::Tripartite222Dim6}) {
    o.add(subspace_properties(kind));
    const auto rep = verify_P0_P1_P2(indistinguishable_subspace(kind));
    o.check(rep.p1.samples >= 100, "P1 grid smaller than 100 points");
    o.add(subspace_stall(kind, 20, rng));
  }
  return o;
}

Outcome c7() {
  Outcome o;
  Rng rng(1007);
  o.add(trace_support_pairs(200, rng));
  for (const auto& p : rank2_cases(50, rng)) {
    o.add(p);
    o.check(p.samples >= 50, p.name + " hit fewer than 50 times");
  }
  o.add(mixing_weight_uniqueness(50, rng));
  return o;
}

Outcome c8() {
  Outcome o;
  Rng rng(1008);
  const std::vector<StateSpace> spaces{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
  int prod_ok = 0, ent_ok = 0;
  for (int i = 0; i < 50; ++i) {
    const auto b = random_product_basis(spaces[i % spaces.size()], rng);
    prod_ok += decide(DiscriminationInstance::pure(b)).status == Status::Distinguishable ? 1 : 0;
  }
  const StateSpace q{2, 2};
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<PureState> bell;
  for (auto [a, b, s] : {std::tuple{0, 3, 1.0}, {0, 3, -1.0}, {1, 2, 1.0}, {1, 2, -1.0}}) {
    ComplexVector v = ComplexVector::Zero(4);
    v(a) = h;
    v(b) = s * h;
    bell.emplace_back(q, v);
  }
  ent_ok += decide(DiscriminationInstance::pure(bell)).status == Status::Indistinguishable ? 1 : 0;
  for (int i = 1; i < 50; ++i) {
    const StateSpace& s = spaces[i % spaces.size()];
    auto b = random_product_basis(s, rng);
    // rotate two members into each other: both become entangled
    const double t = 0.2 + 1.2 * (i % 7) / 7.0;
    const int m = s.total() - 1;
    ComplexVector u = std::cos(t) * b[0].amplitudes() + std::sin(t) * b[m].amplitudes();
    ComplexVector v = -std::sin(t) * b[0].amplitudes() + std::cos(t) * b[m].amplitudes();
    b[0] = PureState::normalized(s, u);
    b[m] = PureState::normalized(s, v);
    const bool has_entangled = !is_product(b[0]) || !is_product(b[m]);
    if (!has_entangled) {
      o.check(false, "mixed basis stayed product");
      continue;
    }
    ent_ok += decide(DiscriminationInstance::pure(b)).status == Status::Indistinguishable ? 1 : 0;
  }
  o.check(prod_ok == 50, std::to_string(prod_ok) + "/50 product bases distinguishable");
  o.check(ent_ok == 50, std::to_string(ent_ok) + "/50 entangled bases indistinguishable");
  o.detail << "product " << prod_ok << "/50, entangled " << ent_ok << "/50";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 two-qubit oracle equivalence", c1}, {"C2 concurrence-sum identity", c2},
      {"C3 separable-not-LOCC witness", c3},   {"C4 tetrahedron round trip", c4},
      {"C5 complement trichotomy", c5},        {"C6 indistinguishable subspaces", c6},
      {"C7 property suites", c7},              {"C8 full-basis criterion", c8}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail << "exception: " << ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " [" << std::fixed << std::setprecision(1) << secs
              << " s] " << o.detail.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
