#include "sepdisc/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sepdisc/config.hpp"
#include "sepdisc/error.hpp"
#include "sepdisc/separability.hpp"
#include "sepdisc/tensor_rank.hpp"

namespace sepdisc {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Distinguishable: return "distinguishable";
    case Status::Indistinguishable: return "indistinguishable";
    case Status::Undecided: return "undecided";
  }
  return "?";
}

std::string_view to_string(TheoremTag t) {
  switch (t) {
    case TheoremTag::T1: return "T1";
    case TheoremTag::C1: return "C1";
    case TheoremTag::T2: return "T2";
    case TheoremTag::C2: return "C2";
    case TheoremTag::T4: return "T4";
    case TheoremTag::T5: return "T5";
    case TheoremTag::T6: return "T6";
    case TheoremTag::T8: return "T8";
  }
  return "?";
}

std::string_view to_string(LoccFlag f) {
  return f == LoccFlag::LoccIndistinguishable ? "locc_indistinguishable" : "unknown";
}

std::string_view to_string(SubspaceAnswer a) {
  switch (a) {
    case SubspaceAnswer::NoDistinguishableBasis: return "no_distinguishable_basis";
    case SubspaceAnswer::HasLoccBasis: return "has_locc_basis";
    case SubspaceAnswer::Undecided: return "undecided";
  }
  return "?";
}

// -- instance ------------------------------------------------------------------

DiscriminationInstance DiscriminationInstance::pure(std::vector<PureState> states, std::optional<PureState> phi) {
  if (states.empty()) throw Error(ErrorCode::InvalidInstance, "no states");
  DiscriminationInstance inst{states.front().space(), std::move(states), {}, std::move(phi)};
  return inst;
}

DiscriminationInstance DiscriminationInstance::mixed(const StateSpace& space, std::vector<ComplexMatrix> projectors) {
  if (projectors.empty()) throw Error(ErrorCode::InvalidInstance, "no projectors");
  return DiscriminationInstance{space, {}, std::move(projectors), std::nullopt};
}

std::vector<ComplexMatrix> DiscriminationInstance::supports() const {
  if (!is_pure()) return projectors;
  std::vector<ComplexMatrix> out;
  for (const auto& s : states) out.push_back(s.density());
  return out;
}

std::vector<ComplexMatrix> DiscriminationInstance::densities() const {
  auto out = supports();
  for (auto& m : out) m /= m.trace().real();
  return out;
}

void DiscriminationInstance::validate() const {
  if (is_pure()) {
    for (const auto& s : states)
      if (!(s.space() == space)) throw Error(ErrorCode::InvalidInstance, "states live in different spaces");
    if (static_cast<int>(states.size()) > space.total()) throw Error(ErrorCode::InvalidInstance, "more states than dimensions");
    const double defect = orthonormality_defect(states);
    if (defect > 1e-9)
      throw Error(ErrorCode::InvalidInstance, "states are not orthonormal (Gram defect " + std::to_string(defect) + ")");
    if (phi) {
      if (!(phi->space() == space)) throw Error(ErrorCode::InvalidInstance, "phi lives in a different space");
      if (static_cast<int>(states.size()) != space.total() - 1)
        throw Error(ErrorCode::InvalidInstance, "with phi declared the states must number D - 1");
      for (std::size_t k = 0; k < states.size(); ++k)
        if (std::abs(phi->inner(states[k])) > 1e-9)
          throw Error(ErrorCode::InvalidInstance, "state " + std::to_string(k) + " is not orthogonal to phi");
    }
    return;
  }
  if (projectors.empty()) throw Error(ErrorCode::InvalidInstance, "empty instance");
  try {
    (void)FeasibilityProblem::from_projectors(space, projectors);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidInstance, e.what());
  }
  for (const auto& p : projectors)
    if (p.trace().real() < 0.5) throw Error(ErrorCode::InvalidInstance, "zero projector");
}

namespace {

ProductTerm product_term(const PureState& s, double w) {
  auto pv = factorize(s.amplitudes(), s.space(), tolerances().rank * 10);
  if (!pv) throw Error(ErrorCode::PreconditionViolated, "expected a product state");
  pv->weight = 1.0;
  return ProductTerm{w, std::move(*pv)};
}

std::vector<ComplexMatrix> densities_of(const std::vector<PureState>& states) {
  std::vector<ComplexMatrix> out;
  for (const auto& s : states) out.push_back(s.density());
  return out;
}

// Attach the certificate only if it survives the independent check.
Verdict finish(Verdict v, const StateSpace& space, const std::vector<ComplexMatrix>& densities) {
  if (v.status != Status::Distinguishable || !v.certificate) return v;
  const auto check = verify_certificate(*v.certificate, space, densities);
  if (!check.ok()) {
    v.status = Status::Undecided;
    v.reason += "; certificate failed verification: " + check.detail;
  }
  return v;
}

void require_basis_of_complement(const PureState& phi, const std::vector<PureState>& basis) {
  const auto& space = phi.space();
  if (static_cast<int>(basis.size()) != space.total() - 1)
    throw Error(ErrorCode::InvalidInstance, "basis must have D - 1 = " + std::to_string(space.total() - 1) + " members");
  auto inst = DiscriminationInstance::pure(basis, phi);
  inst.validate();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

// Anti-parallel plus concurrence-sum test on a two-qubit core. `cores[k]`
// is the embedded two-qubit state of entangled member k, nullopt for
// product members.
Verdict antiparallel_route(const PureState& phi, const std::vector<PureState>& basis, const PureState& phi_core,
                           const std::vector<std::optional<PureState>>& cores, TheoremTag tag) {
  const auto& tol = tolerances();
  Verdict v;
  v.tag = tag;
  const double c_phi = concurrence(phi_core);
  int entangled = 0;
  std::vector<double> conc(basis.size(), 0.0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!cores[k]) continue;
    conc[k] = concurrence(*cores[k]);
    if (conc[k] <= tol.concurrence) {
      conc[k] = 0.0;
      continue;
    }
    ++entangled;
  }
  if (entangled >= 2 && phi.space() == StateSpace{2, 2}) v.locc_flag = LoccFlag::LoccIndistinguishable;

  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!cores[k] || conc[k] <= tol.concurrence) continue;
    const auto ap = antiparallel_test(*cores[k], phi_core);
    if (!ap.pass) {
      v.status = Status::Indistinguishable;
      v.reason = "member " + std::to_string(k) + ": " + ap.reason;
      return v;
    }
  }
  double sum = 0.0;
  for (double c : conc) sum += c;
  if (std::abs(sum - c_phi) > tol.concurrence_sum) {
    v.status = Status::Indistinguishable;
    v.reason = "concurrence sum " + fmt(sum) + " != C(phi) = " + fmt(c_phi);
    return v;
  }

  PovmCertificate cert;
  std::vector<double> lambdas;
  const ComplexMatrix pphi = phi.density();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double lam = conc[k] / sum;
    lambdas.push_back(lam);
    cert.elements.push_back(basis[k].density() + lam * pphi);
    const auto r2 = rank2_separability(basis[k], phi, lam);
    if (r2.verdict.status != SeparabilityStatus::Separable || !r2.verdict.decomposition) {
      v.status = Status::Undecided;
      v.reason = "conditions hold but no product decomposition was found for element " + std::to_string(k) + " (" +
                 r2.verdict.note + ")";
      return v;
    }
    cert.evidence.emplace_back(*r2.verdict.decomposition);
  }
  cert.lambdas = lambdas;
  v.status = Status::Distinguishable;
  v.reason = "anti-parallel eigenvalues and concurrence sum " + fmt(sum) + " = C(phi)";
  v.certificate = std::move(cert);
  return v;
}

}  // namespace

// -- two-qubit deciders --------------------------------------------------------------

Verdict decide_2x2_basis(const PureState& phi, const std::vector<PureState>& basis) {
  if (!(phi.space() == StateSpace{2, 2})) throw Error(ErrorCode::WrongSpace, "expected a 2x2 phi");
  require_basis_of_complement(phi, basis);
  if (concurrence(phi) <= tolerances().concurrence) throw Error(ErrorCode::PhiProduct, "phi is a product state");
  std::vector<std::optional<PureState>> cores(basis.begin(), basis.end());
  Verdict v = antiparallel_route(phi, basis, phi, cores, TheoremTag::T2);
  return finish(std::move(v), phi.space(), densities_of(basis));
}

Verdict decide_max_ent_basis(const std::vector<PureState>& basis) {
  if (basis.size() != 3) throw Error(ErrorCode::InvalidInstance, "expected three states");
  if (!(basis.front().space() == StateSpace{2, 2})) throw Error(ErrorCode::WrongSpace, "expected 2x2 states");
  if (orthonormality_defect(basis) > 1e-9) throw Error(ErrorCode::InvalidInstance, "states are not orthonormal");
  const PureState phi = orthocomplement_basis(basis).front();
  const double c_phi = concurrence(phi);
  if (c_phi <= 1.0 - 1e-8)
    throw Error(ErrorCode::NotMaxEnt, "complement state has concurrence " + fmt(c_phi) + " < 1");
  double sum = 0.0;
  for (const auto& b : basis) sum += concurrence(b);
  const bool by_sum = std::abs(sum - 1.0) <= tolerances().concurrence_sum;
  Verdict v = decide_2x2_basis(phi, basis);
  v.tag = TheoremTag::C2;
  if (!by_sum) {
    v.status = Status::Indistinguishable;
    v.certificate.reset();
    v.reason = "concurrence sum " + fmt(sum) + " != 1";
  } else if (v.status != Status::Distinguishable) {
    v.status = Status::Undecided;
    v.reason = "concurrence sum is 1 but the certificate could not be built: " + v.reason;
  }
  return v;
}

// -- multipartite deciders ------------------------------------------------------------

namespace {

struct Embedding {
  std::vector<int> fixed;
  std::vector<ComplexVector> prefix;
  std::vector<int> pair;  // the two entangled parties
  ComplexMatrix local_j;  // d_j x 2
  ComplexMatrix local_k;  // d_k x 2
};

ComplexMatrix columns(const std::vector<ComplexVector>& v) {
  ComplexMatrix m(v.front().size(), static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = v[i];
  return m;
}

// Contract the prefix, then express the remainder in the local 2x2 frame.
// Returns the failure reason when the state does not embed.
std::variant<PureState, std::string> embed(const PureState& s, const Embedding& e) {
  const auto& space = s.space();
  const int dj = space.dim(e.pair[0]), dk = space.dim(e.pair[1]);
  ComplexVector core = ComplexVector::Zero(dj * dk);
  for (int i = 0; i < space.total(); ++i) {
    const auto d = space.digits(i);
    Complex w = s.amplitudes()(i);
    for (std::size_t f = 0; f < e.fixed.size(); ++f) w *= std::conj(e.prefix[f](d[static_cast<std::size_t>(e.fixed[f])]));
    core(d[static_cast<std::size_t>(e.pair[0])] * dk + d[static_cast<std::size_t>(e.pair[1])]) += w;
  }
  if (core.norm() < 1.0 - 1e-9) return std::string("does not carry the product prefix of phi");
  const ComplexMatrix frame = kron(e.local_j, e.local_k);  // (dj dk) x 4
  const ComplexVector c = frame.adjoint() * core;
  if (c.norm() < 1.0 - 1e-9) return std::string("does not embed into the 2x2 subspace of phi");
  return PureState::normalized(StateSpace{2, 2}, c);
}

}  // namespace

Verdict decide_multipartite_sch2(const PureState& phi, const std::vector<PureState>& basis) {
  const auto& space = phi.space();
  const auto cls = schmidt2_classify(phi);
  if (cls.kind != Schmidt2Kind::Schmidt2 || !cls.decomposition ||
      static_cast<int>(cls.product_parties.size()) != space.parties() - 2)
    throw Error(ErrorCode::WrongForm, "phi is not a product prefix times a two-party entangled state");
  require_basis_of_complement(phi, basis);

  Embedding e;
  e.fixed = cls.product_parties;
  for (int p = 0; p < space.parties(); ++p) {
    if (std::find(e.fixed.begin(), e.fixed.end(), p) != e.fixed.end()) {
      const auto& f = cls.decomposition->a.factors[static_cast<std::size_t>(p)];
      e.prefix.emplace_back(f / f.norm());
    } else {
      e.pair.push_back(p);
    }
  }
  const auto& a = cls.decomposition->a;
  const auto& b = cls.decomposition->b;
  const auto sj = orthonormal_span({a.factors[static_cast<std::size_t>(e.pair[0])], b.factors[static_cast<std::size_t>(e.pair[0])]}, 1e-9);
  const auto sk = orthonormal_span({a.factors[static_cast<std::size_t>(e.pair[1])], b.factors[static_cast<std::size_t>(e.pair[1])]}, 1e-9);
  if (sj.size() != 2 || sk.size() != 2) throw Error(ErrorCode::WrongForm, "phi core is not entangled");
  e.local_j = columns(sj);
  e.local_k = columns(sk);

  const auto phi_core = embed(phi, e);
  if (!std::holds_alternative<PureState>(phi_core)) throw Error(ErrorCode::WrongForm, "phi does not embed");

  std::vector<std::optional<PureState>> cores;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (is_product(basis[k])) {
      cores.emplace_back(std::nullopt);
      continue;
    }
    auto c = embed(basis[k], e);
    if (auto* why = std::get_if<std::string>(&c)) {
      Verdict v;
      v.tag = TheoremTag::T4;
      v.status = Status::Indistinguishable;
      v.reason = "entangled member " + std::to_string(k) + " " + *why;
      return v;
    }
    cores.emplace_back(std::get<PureState>(c));
  }
  Verdict v = antiparallel_route(phi, basis, std::get<PureState>(phi_core), cores, TheoremTag::T4);
  return finish(std::move(v), space, densities_of(basis));
}

Verdict decide_h3(const PureState& phi, const std::vector<PureState>& basis) {
  const auto& space = phi.space();
  const auto cls = schmidt2_classify(phi);
  if (cls.kind != Schmidt2Kind::Schmidt2 || !cls.decomposition || !cls.decomposition->orthogonal ||
      cls.decomposition->entry_distance < 3)
    throw Error(ErrorCode::WrongForm, "phi has no orthogonal two-term decomposition with entry distance >= 3");
  require_basis_of_complement(phi, basis);
  const auto form = orthogonal_form(*cls.decomposition, space);
  const PureState cand = PureState::normalized(
      space, std::sin(form.theta) * form.a_hat.amplitudes() - std::cos(form.theta) * form.b_hat.amplitudes());

  Verdict v;
  v.tag = TheoremTag::T5;
  std::vector<std::size_t> ent;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!is_product(basis[k])) ent.push_back(k);
  if (ent.size() != 1) {
    v.status = Status::Indistinguishable;
    v.reason = std::to_string(ent.size()) + " entangled members; exactly one is required";
    return v;
  }
  const std::size_t m = ent.front();
  if (std::abs(cand.inner(basis[m])) <= 1.0 - 1e-8) {
    v.status = Status::Indistinguishable;
    v.reason = "entangled member " + std::to_string(m) + " is not sin(t)|a> - cos(t)|b>";
    return v;
  }
  PovmCertificate cert;
  std::vector<double> lambdas(basis.size(), 0.0);
  lambdas[m] = 1.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == m) {
      cert.elements.push_back(basis[k].density() + phi.density());
      ProductVector pa = cls.decomposition->a, pb = cls.decomposition->b;
      pa.weight = pb.weight = 1.0;
      cert.evidence.emplace_back(ProductDecomposition{{{1.0, pa}, {1.0, pb}}});
    } else {
      cert.elements.push_back(basis[k].density());
      cert.evidence.emplace_back(ProductDecomposition{{product_term(basis[k], 1.0)}});
    }
  }
  cert.lambdas = lambdas;
  v.status = Status::Distinguishable;
  v.reason = "unique entangled member matches sin(t)|a> - cos(t)|b>; the rest are product";
  v.certificate = std::move(cert);
  return finish(std::move(v), space, densities_of(basis));
}

SubspaceVerdict subspace_verdict(const PureState& phi) {
  if (is_product(phi)) throw Error(ErrorCode::PhiProduct, "phi is a product state");
  const auto cls = schmidt2_classify(phi);
  SubspaceVerdict out;
  switch (cls.kind) {
    case Schmidt2Kind::AtLeast3:
      out.answer = SubspaceAnswer::NoDistinguishableBasis;
      out.reason = "orthogonal Schmidt number >= 3: " + cls.detail;
      break;
    case Schmidt2Kind::Schmidt2:
      out.answer = SubspaceAnswer::HasLoccBasis;
      out.basis = locc_basis_sch2(phi);
      out.reason = "orthogonal Schmidt number 2";
      break;
    default:
      out.answer = SubspaceAnswer::Undecided;
      out.reason = cls.detail;
  }
  return out;
}

// -- general routes ---------------------------------------------------------------------

namespace {

std::optional<Verdict> full_basis_route(const DiscriminationInstance& inst) {
  const int d = inst.space.total();
  Verdict v;
  v.tag = TheoremTag::T1;
  if (inst.is_pure()) {
    if (static_cast<int>(inst.states.size()) != d) return std::nullopt;
    PovmCertificate cert;
    for (std::size_t k = 0; k < inst.states.size(); ++k) {
      if (!is_product(inst.states[k])) {
        v.status = Status::Indistinguishable;
        v.reason = "full basis with entangled member " + std::to_string(k) + "; only product bases qualify";
        return v;
      }
      cert.elements.push_back(inst.states[k].density());
      cert.evidence.emplace_back(ProductDecomposition{{product_term(inst.states[k], 1.0)}});
    }
    v.status = Status::Distinguishable;
    v.reason = "product basis";
    v.certificate = std::move(cert);
    return v;
  }
  int rank = 0;
  for (const auto& p : inst.projectors) rank += static_cast<int>(std::lround(p.trace().real()));
  if (rank != d) return std::nullopt;
  PovmCertificate cert;
  bool undecided = false;
  for (std::size_t k = 0; k < inst.projectors.size(); ++k) {
    const auto& p = inst.projectors[k];
    const auto cuts = FeasibilityProblem::from_projectors(inst.space, {p}).cuts;
    SeparabilityVerdict worst;
    worst.status = SeparabilityStatus::Separable;
    for (const auto& c : cuts) {
      const auto sv = ppt_oracle(p, inst.space, c);
      if (sv.status == SeparabilityStatus::Entangled) {
        v.status = Status::Indistinguishable;
        v.reason = "projector " + std::to_string(k) + " is entangled (" + sv.note + ")";
        return v;
      }
      if (sv.status == SeparabilityStatus::Undecided) worst = sv;
      else if (worst.status == SeparabilityStatus::Separable && sv.decomposition) worst = sv;
    }
    if (worst.status == SeparabilityStatus::Undecided) undecided = true;
    cert.elements.push_back(p);
    if (worst.decomposition) cert.evidence.emplace_back(*worst.decomposition);
    else cert.evidence.emplace_back(make_ppt_record(p, inst.space, cuts));
  }
  if (undecided) {
    v.status = Status::Undecided;
    v.reason = "every projector is PPT but PPT is not sufficient here";
    return v;
  }
  v.status = Status::Distinguishable;
  v.reason = "every projector is separable";
  v.certificate = std::move(cert);
  return v;
}

// All states but one are product and complete to a product basis together
// with the complement of the remaining one.
std::optional<Verdict> completion_route(const DiscriminationInstance& inst) {
  if (!inst.is_pure()) return std::nullopt;
  const auto& st = inst.states;
  std::vector<std::optional<ProductVector>> prod;
  std::vector<std::size_t> entangled;
  for (std::size_t k = 0; k < st.size(); ++k) {
    prod.push_back(factorize(st[k].amplitudes(), inst.space, tolerances().rank));
    if (!prod.back()) entangled.push_back(k);
  }
  if (entangled.size() > 1) return std::nullopt;
  std::vector<std::size_t> sinks = entangled;
  if (sinks.empty())
    for (std::size_t k = st.size(); k-- > 0;) sinks.push_back(k);
  for (std::size_t s : sinks) {
    std::vector<ProductVector> others;
    for (std::size_t k = 0; k < st.size(); ++k)
      if (k != s) {
        ProductVector pv = *prod[k];
        pv.weight = 1.0;
        others.push_back(std::move(pv));
      }
    const auto completion = complete_product_basis(others, inst.space);
    if (!completion) continue;
    PovmCertificate cert;
    ProductDecomposition sink_dec;
    ComplexMatrix sink = ComplexMatrix::Zero(inst.space.total(), inst.space.total());
    for (const auto& c : *completion) {
      const ComplexVector v = c.assemble();
      sink += v * v.adjoint() / v.squaredNorm();
      sink_dec.terms.push_back({1.0, c});
    }
    for (std::size_t k = 0; k < st.size(); ++k) {
      if (k == s) {
        cert.elements.push_back(sink);
        cert.evidence.emplace_back(sink_dec);
      } else {
        cert.elements.push_back(st[k].density());
        cert.evidence.emplace_back(ProductDecomposition{{ProductTerm{1.0, [&] {
          ProductVector pv = *prod[k];
          pv.weight = 1.0;
          return pv;
        }()}}});
      }
    }
    Verdict v;
    v.tag = TheoremTag::C1;
    v.status = Status::Distinguishable;
    v.reason = "product states complete to a product basis; state " + std::to_string(s) +
               " takes the projector onto the completion";
    v.certificate = std::move(cert);
    v = finish(std::move(v), inst.space, inst.densities());
    if (v.status == Status::Distinguishable) return v;
  }
  return std::nullopt;
}

}  // namespace

Verdict decide_by_feasibility(const DiscriminationInstance& inst) {
  auto fp = FeasibilityProblem::from_projectors(inst.space, inst.supports());
  const auto fr = feasibility_solve(fp);
  Verdict v;
  v.tag = TheoremTag::T1;
  v.feasibility = fr.diagnostics;
  if (!fr.feasible) {
    v.status = Status::Undecided;
    v.reason = "PPT feasibility residual stalled at " + fmt(fr.diagnostics.residual) +
               " after " + std::to_string(fr.diagnostics.iterations) + " iterations (no certificate of infeasibility)";
    return v;
  }
  PovmCertificate cert;
  for (std::size_t k = 0; k < fp.projectors.size(); ++k) {
    ComplexMatrix e = fp.projectors[k] + fr.operators[k];
    cert.evidence.emplace_back(make_ppt_record(e, inst.space, fp.cuts));
    cert.elements.push_back(std::move(e));
  }
  cert.relaxed = !fr.exact;
  v.certificate = std::move(cert);
  const auto check = verify_certificate(*v.certificate, inst.space, inst.densities());
  if (!fr.exact) {
    v.status = Status::Undecided;
    v.reason = "PPT-feasible (relaxation); PPT does not imply separability in " + inst.space.to_string();
  } else if (!check.ok()) {
    v.status = Status::Undecided;
    v.reason = "PPT-feasible point found but it misses the certificate tolerances: " + check.detail;
  } else {
    v.status = Status::Distinguishable;
    v.reason = "PPT-feasible and PPT is exact in " + inst.space.to_string();
  }
  return v;
}

namespace {

Verdict general_route(const DiscriminationInstance& inst) {
  if (auto v = full_basis_route(inst)) return *v;
  if (auto v = completion_route(inst)) return *v;
  return decide_by_feasibility(inst);
}

Verdict complement_route(const DiscriminationInstance& inst) {
  const auto& space = inst.space;
  const auto& basis = inst.states;
  const PureState phi = inst.phi ? *inst.phi : orthocomplement_basis(basis).front();

  if (is_product(phi)) {
    Verdict v;
    v.tag = TheoremTag::T1;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!is_product(basis[k])) {
        v.status = Status::Indistinguishable;
        v.reason = "phi is product, so only a product basis qualifies; member " + std::to_string(k) + " is entangled";
        return v;
      }
    PovmCertificate cert;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == 0) {
        cert.elements.push_back(basis[k].density() + phi.density());
        cert.evidence.emplace_back(ProductDecomposition{{product_term(basis[k], 1.0), product_term(phi, 1.0)}});
      } else {
        cert.elements.push_back(basis[k].density());
        cert.evidence.emplace_back(ProductDecomposition{{product_term(basis[k], 1.0)}});
      }
    }
    v.status = Status::Distinguishable;
    v.reason = "product basis completed by the product state phi";
    v.certificate = std::move(cert);
    return finish(std::move(v), space, densities_of(basis));
  }

  const auto cls = schmidt2_classify(phi);
  if (cls.kind == Schmidt2Kind::AtLeast3) {
    Verdict v;
    v.tag = TheoremTag::T6;
    v.status = Status::Indistinguishable;
    v.reason = "orthogonal Schmidt number of phi is at least 3 (" + cls.detail + ")";
    return v;
  }
  if (cls.kind == Schmidt2Kind::Schmidt2 && cls.decomposition) {
    if (static_cast<int>(cls.product_parties.size()) == space.parties() - 2) {
      if (space == StateSpace{2, 2}) {
        if (concurrence(phi) > 1.0 - 1e-8) return decide_max_ent_basis(basis);
        return decide_2x2_basis(phi, basis);
      }
      return decide_multipartite_sch2(phi, basis);
    }
    if (cls.decomposition->entry_distance >= 3) return decide_h3(phi, basis);
  }
  Verdict v = general_route(inst);
  v.reason += " [phi classification: " + std::string(to_string(cls.kind)) + "]";
  return v;
}

}  // namespace

Verdict decide(const DiscriminationInstance& instance) {
  instance.validate();
  const int d = instance.space.total();
  const auto n = static_cast<int>(instance.size());
  if (instance.is_pure() && n == d - 1) return complement_route(instance);
  Verdict v = general_route(instance);
  if (instance.is_pure() && n == d - 2) {
    const auto comp = orthocomplement_basis(instance.states);
    v.subspace = verify_P0_P1_P2(comp[0], comp[1]);
    if (v.status != Status::Distinguishable) {
      v.tag = TheoremTag::T8;
      v.reason += v.subspace->all_pass()
                      ? "; the complement passes the sampled P0/P1/P2 checks"
                      : "; the complement fails the P0/P1/P2 checks";
    }
  }
  return v;
}

}  // namespace sepdisc
