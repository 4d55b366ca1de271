#include "sepdisc_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>

#include "sepdisc/certificate.hpp"
#include "sepdisc/error.hpp"
#include "sepdisc/feasibility.hpp"
#include "sepdisc/separability.hpp"
#include "sepdisc/tensor_rank.hpp"

namespace sepdisc::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

double fidelity(const ComplexVector& a, const ComplexVector& b) {
  return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

double min_pt_eigenvalue_2x2(const ComplexMatrix& rho) {
  const StateSpace q{2, 2};
  return min_eigenvalue(partial_transpose(rho / rho.trace().real(), q, 1));
}

PureState transform(const ComplexMatrix& u, const PureState& s) { return PureState::normalized(s.space(), u * s.amplitudes()); }

std::vector<ComplexMatrix> projectors_of(const std::vector<PureState>& states) {
  std::vector<ComplexMatrix> p;
  for (const auto& s : states) p.push_back(projector(s.amplitudes()));
  return p;
}

void fail_once(PropertyResult& r, const std::string& why) {
  ++r.failures;
  if (r.note.empty()) r.note = why;
}

}  // namespace

bool SuiteResult::pass() const {
  return !properties.empty() && std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass(); });
}

PropertyResult trace_support_pairs(int n, Rng& rng) {
  PropertyResult r{"trace_support_both_directions"};
  r.limit = 1e-8;
  const std::vector<StateSpace> spaces{{2, 2}, {2, 3}, {3, 3}};
  for (int i = 0; i < n; ++i) {
    ++r.samples;
    const StateSpace& sp = spaces[static_cast<std::size_t>(i) % spaces.size()];
    const int d = sp.total();
    const int rank = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d - 1));
    const ComplexMatrix v = random_unitary(d, rng).leftCols(rank);
    RealVector p(rank);
    for (int k = 0; k < rank; ++k) p(k) = uniform(rng, 0.05, 1.0);
    p /= p.sum();
    const ComplexMatrix rho = v * p.cast<Complex>().asDiagonal() * v.adjoint();
    const ComplexMatrix proj = v * v.adjoint();
    const ComplexMatrix q = ComplexMatrix::Identity(d, d) - proj;
    const ComplexMatrix w = random_unitary(d, rng);
    RealVector a(d);
    for (int k = 0; k < d; ++k) a(k) = uniform(rng, 0.0, 1.0);
    ComplexMatrix e = proj + q * (w * a.cast<Complex>().asDiagonal() * w.adjoint()) * q;
    const bool dominated = i % 2 == 0;
    if (!dominated) {
      ComplexVector x = v * random_complex_vector(rank, rng);
      x.normalize();
      e -= uniform(rng, 0.05, 1.0) * projector(x);
    }
    e = 0.5 * (e + e.adjoint());
    try {
      const auto res = lemma1_check(e, rho);
      if (dominated) {
        r.worst = std::max(r.worst, std::abs(res.trace - 1.0));
        if (res.outcome != Lemma1Outcome::HoldsBothWays) fail_once(r, "dominated E: " + res.detail);
      } else if (res.outcome != Lemma1Outcome::Violation) {
        fail_once(r, "non-dominated E: " + res.detail);
      }
    } catch (const std::exception& ex) {
      fail_once(r, ex.what());
    }
  }
  return r;
}

PropertyResult unique_decomposition(int n, Rng& rng) {
  PropertyResult r{"unique_two_term_decomposition"};
  r.limit = 1e-8;
  const std::vector<StateSpace> spaces{{2, 2, 2}, {2, 3, 3}};
  for (int i = 0; i < n; ++i) {
    ++r.samples;
    const StateSpace& sp = spaces[static_cast<std::size_t>(i) % spaces.size()];
    const bool orth = (i / 2) % 2 == 1;
    std::vector<ComplexVector> fa, fb;
    for (int k = 0; k < sp.parties(); ++k) {
      fa.push_back(random_complex_vector(sp.dim(k), rng).normalized());
      fb.push_back(random_complex_vector(sp.dim(k), rng).normalized());
    }
    if (orth) {
      fb[0] -= fa[0] * fa[0].dot(fb[0]);
      fb[0].normalize();
    }
    const ComplexVector a = PureState::product(sp, fa).amplitudes();
    const ComplexVector b = PureState::product(sp, fb).amplitudes();
    const PureState phi = PureState::normalized(sp, random_complex(rng) * a + random_complex(rng) * b);
    try {
      const auto c = schmidt2_classify(phi);
      const auto want = orth ? Schmidt2Kind::Schmidt2 : Schmidt2Kind::AtLeast3;
      if (c.kind != want || !c.decomposition) {
        fail_once(r, "classified as " + std::string(to_string(c.kind)));
        continue;
      }
      if (!c.decomposition->unique) {
        fail_once(r, "decomposition not flagged unique");
        continue;
      }
      const ComplexVector da = c.decomposition->a.assemble(), db = c.decomposition->b.assemble();
      const double m = std::max(std::min(fidelity(da, a), fidelity(db, b)), std::min(fidelity(da, b), fidelity(db, a)));
      r.worst = std::max(r.worst, 1.0 - m);
      if (1.0 - m > r.limit) fail_once(r, "recovered terms differ from the constructed ones");
    } catch (const std::exception& ex) {
      fail_once(r, ex.what());
    }
  }
  return r;
}

std::vector<PropertyResult> rank2_cases(int per_case, Rng& rng) {
  const StateSpace q{2, 2};
  std::vector<PropertyResult> out{{"rank2_case_i"}, {"rank2_case_ii"}, {"rank2_case_iii"}, {"rank2_entangled"}};
  const Rank2Case want_case[] = {Rank2Case::BothProduct, Rank2Case::ProductWithZeroWeight, Rank2Case::ProductPair,
                                 Rank2Case::Entangled};
  for (std::size_t c = 0; c < out.size(); ++c) {
    PropertyResult& r = out[c];
    r.limit = 1e-8;
    for (int i = 0; i < per_case; ++i) {
      PureState psi, phi;
      double lambda = uniform(rng, 0.1, 3.0);
      if (c == 0) {
        psi = random_product_state(q, rng);
        phi = random_product_state(q, rng);
      } else if (c == 1) {
        psi = random_product_state(q, rng);
        phi = random_state(q, rng);
        lambda = 0.0;
      } else if (c == 2) {
        // psi ~ p1 u + p2 v, phi ~ q1 u + q2 v with q1 conj(q2) = -t p1 conj(p2)
        const ComplexVector u = random_product_state(q, rng).amplitudes();
        const ComplexVector v = random_product_state(q, rng).amplitudes();
        const Complex p1 = random_complex(rng), p2 = random_complex(rng), q1 = random_complex(rng);
        const double t = uniform(rng, 0.2, 5.0);
        const Complex q2 = std::conj(-t * p1 * std::conj(p2) / q1);
        const ComplexVector x = p1 * u + p2 * v, y = q1 * u + q2 * v;
        psi = PureState::normalized(q, x);
        phi = PureState::normalized(q, y);
        lambda = (y.squaredNorm() / x.squaredNorm()) / t;
      } else {
        psi = random_state(q, rng);
        phi = random_state(q, rng);
      }
      ++r.samples;
      try {
        const auto res = rank2_separability(psi, phi, lambda);
        const ComplexMatrix rho = psi.density() + lambda * phi.density();
        const double pt = min_pt_eigenvalue_2x2(rho);
        const bool sep = res.verdict.status == SeparabilityStatus::Separable;
        if (res.case_tag != want_case[c]) {
          fail_once(r, "landed in case " + std::string(to_string(res.case_tag)));
          continue;
        }
        if (res.verdict.status == SeparabilityStatus::Undecided) {
          fail_once(r, "undecided: " + res.verdict.note);
          continue;
        }
        if (sep != (pt >= -1e-9)) fail_once(r, "disagrees with the partial transpose");
        if (sep) {
          if (!res.verdict.decomposition) {
            fail_once(r, "separable without a decomposition");
            continue;
          }
          const double err = res.verdict.decomposition->reassembly_error(rho);
          r.worst = std::max(r.worst, err);
          if (err > r.limit) fail_once(r, "decomposition does not reassemble");
        }
      } catch (const std::exception& ex) {
        fail_once(r, ex.what());
      }
    }
  }
  return out;
}

PropertyResult mixing_weight_uniqueness(int n, Rng& rng) {
  const StateSpace q{2, 2};
  PropertyResult r{"mixing_weight_uniqueness"};
  r.limit = 1e-8;
  for (int i = 0; i < n; ++i) {
    ++r.samples;
    ComplexMatrix m_phi(2, 2), s(2, 2);
    for (int k = 0; k < 4; ++k) {
      m_phi(k / 2, k % 2) = random_complex(rng);
      s(k / 2, k % 2) = random_complex(rng);
    }
    const Complex mu = std::polar(uniform(rng, 0.3, 2.0), uniform(rng, 0.0, 2 * kPi));
    ComplexMatrix dg = ComplexMatrix::Zero(2, 2);
    dg(0, 0) = mu;
    dg(1, 1) = -uniform(rng, 0.3, 3.0) * mu;
    const ComplexMatrix m_psi = s * dg * s.inverse() * m_phi;
    const PureState phi = PureState::normalized(q, from_coeff_matrix(m_phi));
    const PureState psi = PureState::normalized(q, from_coeff_matrix(m_psi));
    try {
      const auto ap = antiparallel_test(psi, phi);
      if (!ap.pass) {
        fail_once(r, "constructed pair is not anti-parallel: " + ap.reason);
        continue;
      }
      const double ls = ap.lambda_star;
      const auto at = rank2_separability(psi, phi, ls);
      if (at.verdict.status != SeparabilityStatus::Separable) {
        fail_once(r, "not separable at lambda*");
        continue;
      }
      r.worst = std::max(r.worst, at.verdict.decomposition->reassembly_error(psi.density() + ls * phi.density()));
      for (double f : {1.0 - 1e-3, 1.0 + 1e-3}) {
        const auto off = rank2_separability(psi, phi, ls * f);
        const double pt = min_pt_eigenvalue_2x2(psi.density() + ls * f * phi.density());
        // the PT eigenvalue can fall off quadratically away from lambda*
        if (off.verdict.status != SeparabilityStatus::Entangled || pt >= -1e-14) {
          std::ostringstream m;
          m << "perturbed weight still separable: " << to_string(off.verdict.status) << ", pt eigenvalue "
            << std::scientific << pt << " at factor " << f;
          fail_once(r, m.str());
        }
      }
    } catch (const std::exception& ex) {
      fail_once(r, ex.what());
    }
  }
  return r;
}

PropertyResult oracle_equivalence(int n, Rng& rng) {
  const StateSpace q{2, 2};
  PropertyResult r{"oracle_equivalence"};
  r.limit = 1e-7;
  int n_dist = 0, n_ind = 0;
  double min_stall = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    ++r.samples;
    PureState phi;
    std::vector<PureState> basis;
    if (i % 2 == 1) {
      const double s = uniform(rng, 0.05, 1.0);
      double w[3];
      for (double& x : w) x = uniform(rng, 0.0, 1.0);
      const double tw = w[0] + w[1] + w[2];
      const auto inst = basis_for_targets(s * w[0] / tw, s * w[1] / tw, s * w[2] / tw);
      const ComplexMatrix u = random_local_unitary(q, rng);
      phi = transform(u, inst.phi);
      for (const auto& b : inst.basis) basis.push_back(transform(u, b));
    } else {
      do phi = random_state(q, rng);
      while (concurrence(phi) < 1e-3);
      basis = random_orthocomplement_basis({phi}, rng);
    }
    try {
      const Verdict v = decide_2x2_basis(phi, basis);
      const auto fr = feasibility_solve(FeasibilityProblem::from_projectors(q, projectors_of(basis)));
      const double res = fr.diagnostics.residual;
      if (v.status == Status::Distinguishable) {
        ++n_dist;
        r.worst = std::max(r.worst, res);
        if (!(res < 1e-7)) fail_once(r, "analytic distinguishable, solver residual " + std::to_string(res));
      } else if (v.status == Status::Indistinguishable) {
        ++n_ind;
        min_stall = std::min(min_stall, res);
        if (!(res > 1e-4)) fail_once(r, "analytic indistinguishable, solver residual " + std::to_string(res));
      } else {
        fail_once(r, "analytic decider undecided: " + v.reason);
      }
    } catch (const std::exception& ex) {
      fail_once(r, ex.what());
    }
  }
  std::ostringstream note;
  note << n_dist << " distinguishable, " << n_ind << " indistinguishable, smallest stall residual " << min_stall;
  r.note = r.note.empty() ? note.str() : r.note + "; " + note.str();
  return r;
}

namespace {

// alpha < beta strictly, both in (0, pi/4]
template <class F>
void for_each_family_pair(int grid, F&& f) {
  for (int j = 0; j < grid; ++j) {
    const double beta = kPi / 4 * (j + 1) / grid;
    for (int i = 0; i < grid; ++i) f(beta * (i + 1) / (grid + 1), beta);
  }
}

}  // namespace

PropertyResult family_identity(int grid) {
  PropertyResult r{"family_concurrence_identity"};
  r.limit = 1e-9;
  for_each_family_pair(grid, [&](double alpha, double beta) {
    const auto [lo, hi] = family_gamma_range(alpha, beta);
    for (int k = 0; k < grid; ++k) {
      ++r.samples;
      const FamilyParams p{alpha, beta, lo + (hi - lo) * k / (grid - 1)};
      try {
        const auto inst = family_sep_not_locc(p);
        const auto closed = family_concurrences(p);
        double sum = 0.0, dev = 0.0;
        for (std::size_t m = 0; m < 3; ++m) {
          const double c = concurrence(inst.basis[m]);
          sum += c;
          dev = std::max(dev, std::abs(c - closed[m]));
        }
        dev = std::max(dev, std::abs(sum - concurrence(inst.phi)));
        r.worst = std::max(r.worst, dev);
        if (dev > r.limit) fail_once(r, "identity off by " + std::to_string(dev));
      } catch (const std::exception& ex) {
        fail_once(r, ex.what());
      }
    }
  });
  return r;
}

PropertyResult family_endpoints(int grid) {
  PropertyResult r{"family_gamma_endpoints"};
  r.limit = 1e-9;
  for_each_family_pair(grid, [&](double alpha, double beta) {
    const auto [lo, hi] = family_gamma_range(alpha, beta);
    for (int end = 0; end < 2; ++end) {
      ++r.samples;
      try {
        const auto inst = family_sep_not_locc({alpha, beta, end == 0 ? lo : hi});
        const double c2 = concurrence(inst.basis[1]), c3 = concurrence(inst.basis[2]);
        const double prod = end == 0 ? c2 : c3, other = end == 0 ? c3 : c2;
        r.worst = std::max(r.worst, prod);
        if (!(prod < r.limit && other >= r.limit)) fail_once(r, "endpoint does not have exactly one product member");
      } catch (const std::exception& ex) {
        fail_once(r, ex.what());
      }
    }
  });
  return r;
}

PropertyResult sep_not_locc_witness(int n, Rng& rng) {
  PropertyResult r{"sep_not_locc_witness"};
  r.limit = 1e-7;
  for (int i = 0; i < n; ++i) {
    ++r.samples;
    const double beta = uniform(rng, 0.05, kPi / 4 - 0.01);
    const double alpha = beta * uniform(rng, 0.1, 0.9);
    const auto [lo, hi] = family_gamma_range(alpha, beta);
    const FamilyParams p{alpha, beta, lo + (hi - lo) * uniform(rng, 0.05, 0.95)};
    try {
      const auto inst = family_sep_not_locc(p);
      const auto di = DiscriminationInstance::pure(inst.basis, inst.phi);
      const Verdict v = decide(di);
      if (v.status != Status::Distinguishable || !v.certificate) {
        fail_once(r, "not distinguishable: " + v.reason);
        continue;
      }
      const auto chk = verify_certificate(*v.certificate, di.space, di.densities());
      r.worst = std::max({r.worst, chk.completeness_error, chk.correctness_error, chk.evidence_error});
      if (!chk.ok()) fail_once(r, "certificate check: " + chk.detail);
      int entangled = 0;
      for (const auto& b : inst.basis) entangled += concurrence(b) > 1e-9 ? 1 : 0;
      if (entangled < 2) fail_once(r, "fewer than two entangled members");
      if (v.locc_flag != LoccFlag::LoccIndistinguishable) fail_once(r, "LOCC flag not set");
    } catch (const std::exception& ex) {
      fail_once(r, ex.what());
    }
  }
  return r;
}

std::vector<SweepRow> tetra_sweep(double step) {
  if (!(step > 0.0 && step <= 0.25)) throw Error(ErrorCode::PreconditionViolated, "need 0 < step <= 0.25");
  const int n = static_cast<int>(std::floor(1.0 / step + 1e-9));
  std::vector<SweepRow> rows;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        const TetraPoint x{i * step, j * step, k * step};
        if (!in_tetrahedron(x, 1e-9)) continue;
        SweepRow row;
        row.x = x;
        const ComplexMatrix u = tetra_unitary(x);
        row.unitarity_defect = (u.adjoint() * u - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff();
        const auto inst = basis_from_unitary(u);
        const double want[3] = {x.x1, x.x2, x.x3};
        for (std::size_t m = 0; m < 3; ++m) {
          row.achieved[m] = concurrence(inst.basis[m]);
          row.max_error = std::max(row.max_error, std::abs(row.achieved[m] - want[m]));
        }
        row.face = std::abs(x.x1 + x.x2 + x.x3 - 1.0) <= 1e-9;
        row.status = decide_max_ent_basis(inst.basis).status;
        rows.push_back(row);
      }
  return rows;
}

PropertyResult tetra_roundtrip(const std::vector<SweepRow>& rows) {
  PropertyResult r{"tetra_roundtrip"};
  r.limit = 1e-8;
  double worst_u = 0.0;
  for (const auto& row : rows) {
    ++r.samples;
    r.worst = std::max(r.worst, row.max_error);
    worst_u = std::max(worst_u, row.unitarity_defect);
    if (row.max_error >= 1e-8 || row.unitarity_defect >= 1e-10) fail_once(r, "round trip outside tolerance");
  }
  std::ostringstream note;
  note << "worst unitarity defect " << worst_u << " (limit 1e-10)";
  r.note = r.note.empty() ? note.str() : r.note + "; " + note.str();
  return r;
}

PropertyResult tetra_verdicts(const std::vector<SweepRow>& rows) {
  PropertyResult r{"tetra_face_verdicts"};
  int face = 0;
  for (const auto& row : rows) {
    ++r.samples;
    face += row.face ? 1 : 0;
    const Status want = row.face ? Status::Distinguishable : Status::Indistinguishable;
    if (row.status != want) {
      std::ostringstream m;
      m << "(" << row.x.x1 << ", " << row.x.x2 << ", " << row.x.x3 << ") gave " << to_string(row.status);
      fail_once(r, m.str());
    }
  }
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(face) + " face points";
  return r;
}

PropertyResult subspace_properties(SubspaceKind kind) {
  PropertyResult r{"subspace_" + std::string(to_string(kind)) + "_P0_P1_P2"};
  r.limit = 1e-9;
  try {
    const auto spec = indistinguishable_subspace(kind);
    const auto rep = verify_P0_P1_P2(spec);
    r.samples = rep.p0.samples + rep.p1.samples + rep.p2.samples;
    r.failures = rep.p0.failures + rep.p1.failures + rep.p2.failures;
    if (!rep.all_pass()) {
      r.failures = std::max(r.failures, 1);
      r.note = rep.p0.detail + " | " + rep.p1.detail + " | " + rep.p2.detail;
    }
    const StateSpace& sp = spec.phi1.space();
    const auto want = kind == SubspaceKind::Bipartite3x3Dim7 ? PureState::basis(sp, {0, 1}) : PureState::basis(sp, {0, 0, 0});
    if (!rep.product_vector) {
      fail_once(r, "no product vector reported");
    } else {
      const double dev = 1.0 - fidelity(rep.product_vector->assemble(), want.amplitudes());
      r.worst = dev;
      if (dev > r.limit) fail_once(r, "product vector is not the expected basis state");
    }
    if (r.note.empty()) r.note = "p1 samples " + std::to_string(rep.p1.samples) + ", p2 samples " + std::to_string(rep.p2.samples);
  } catch (const std::exception& ex) {
    fail_once(r, ex.what());
  }
  return r;
}

PropertyResult subspace_stall(SubspaceKind kind, int n, Rng& rng) {
  PropertyResult r{"subspace_" + std::string(to_string(kind)) + "_feasibility_stall"};
  r.limit = 1e-4;
  const auto spec = indistinguishable_subspace(kind);
  const StateSpace& sp = spec.phi1.space();
  std::vector<PureState> fixed;
  for (const auto& v : orthonormal_span({spec.phi1.amplitudes(), spec.phi2.amplitudes()}, 1e-12))
    fixed.push_back(PureState::normalized(sp, v));
  double smallest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    ++r.samples;
    try {
      const auto basis = random_orthocomplement_basis(fixed, rng);
      const auto fr = feasibility_solve(FeasibilityProblem::from_projectors(sp, projectors_of(basis)));
      smallest = std::min(smallest, fr.diagnostics.residual);
      if (!(fr.diagnostics.residual > 1e-4) || fr.feasible) fail_once(r, "solver reached a feasible point");
    } catch (const std::exception& ex) {
      fail_once(r, ex.what());
    }
  }
  r.worst = smallest;
  std::ostringstream note;
  note << "smallest stall residual " << smallest << " (must exceed 1e-4)";
  r.note = r.note.empty() ? note.str() : r.note + "; " + note.str();
  return r;
}

SuiteResult run_lemmas(const SuiteOptions& o) {
  Rng rng(o.seed);
  SuiteResult s{"lemmas"};
  s.properties.push_back(trace_support_pairs(o.trace_support_pairs, rng));
  s.properties.push_back(unique_decomposition(o.unique_decomposition_states, rng));
  for (auto& p : rank2_cases(o.rank2_per_case, rng)) s.properties.push_back(std::move(p));
  s.properties.push_back(mixing_weight_uniqueness(o.mixing_weight_pairs, rng));
  return s;
}

SuiteResult run_two_qubit(const SuiteOptions& o) {
  Rng rng(o.seed);
  SuiteResult s{"two_qubit"};
  s.properties.push_back(family_identity(o.family_grid));
  s.properties.push_back(family_endpoints(o.family_grid));
  s.properties.push_back(sep_not_locc_witness(o.witness_samples, rng));
  s.properties.push_back(oracle_equivalence(o.oracle_bases, rng));
  return s;
}

SuiteResult run_tetra(const SuiteOptions& o) {
  SuiteResult s{"tetra"};
  const auto rows = tetra_sweep(o.tetra_step);
  s.properties.push_back(tetra_roundtrip(rows));
  s.properties.push_back(tetra_verdicts(rows));
  return s;
}

SuiteResult run_subspaces(const SuiteOptions& o) {
  Rng rng(o.seed);
  SuiteResult s{"subspaces"};
  for (auto kind : {SubspaceKind::Bipartite3x3Dim7, SubspaceKind::Tripartite222Dim6}) {
    s.properties.push_back(subspace_properties(kind));
    s.properties.push_back(subspace_stall(kind, o.subspace_bases, rng));
  }
  return s;
}

void print(const PropertyResult& p, std::ostream& out) {
  out << "  " << (p.pass() ? "pass" : "FAIL") << "  " << p.name << ": " << p.samples - p.failures << "/" << p.samples
      << " ok";
  if (p.limit > 0.0) out << ", worst " << std::setprecision(3) << p.worst << " (limit " << p.limit << ")";
  if (!p.note.empty()) out << "; " << p.note;
  out << "\n";
}

void print(const SuiteResult& s, std::ostream& out) {
  out << "[" << s.name << "] " << (s.pass() ? "pass" : "FAIL") << "\n";
  for (const auto& p : s.properties) print(p, out);
}

}  // namespace sepdisc::cli
