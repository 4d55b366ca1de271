#include "sepdisc/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sepdisc/config.hpp"
#include "sepdisc/error.hpp"

namespace sepdisc {

namespace {

constexpr double kPi = std::numbers::pi;
const StateSpace kQubits{2, 2};

PureState two_qubit(Complex a00, Complex a01, Complex a10, Complex a11) {
  ComplexVector v(4);
  v << a00, a01, a10, a11;
  return PureState::normalized(kQubits, v);
}

BasisInstance family_unchecked(double alpha, double beta, double gamma) {
  const ComplexVector psi_m = family_psi(alpha - kPi / 2).amplitudes();
  const ComplexVector phi_m = family_phi(beta - kPi / 2).amplitudes();
  BasisInstance out{family_phi(beta), {}};
  out.basis.push_back(family_psi(alpha));
  out.basis.push_back(PureState::normalized(kQubits, std::cos(gamma) * psi_m + std::sin(gamma) * phi_m));
  out.basis.push_back(PureState::normalized(kQubits, std::sin(gamma) * psi_m - std::cos(gamma) * phi_m));
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

PureState family_psi(double t) { return two_qubit(0.0, std::cos(t), std::sin(t), 0.0); }
PureState family_phi(double t) { return two_qubit(std::cos(t), 0.0, 0.0, std::sin(t)); }

std::pair<double, double> family_gamma_range(double alpha, double beta) {
  const double sa = std::sin(2 * alpha), sb = std::sin(2 * beta);
  return {std::atan(std::sqrt(sa / sb)), std::atan(std::sqrt(sb / sa))};
}

void validate(const FamilyParams& p) {
  constexpr double eps = 1e-12;
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma))
    throw Error(ErrorCode::ParamsOutOfRange, "parameters must be finite");
  if (!(p.alpha > 0.0)) throw Error(ErrorCode::ParamsOutOfRange, "need 0 < alpha (alpha = " + fmt(p.alpha) + ")");
  if (p.alpha > p.beta + eps)
    throw Error(ErrorCode::ParamsOutOfRange, "need alpha <= beta (" + fmt(p.alpha) + " > " + fmt(p.beta) + ")");
  if (p.beta > kPi / 4 + eps) throw Error(ErrorCode::ParamsOutOfRange, "need beta <= pi/4 (beta = " + fmt(p.beta) + ")");
  const auto [lo, hi] = family_gamma_range(p.alpha, p.beta);
  if (p.gamma < lo - eps || p.gamma > hi + eps)
    throw Error(ErrorCode::ParamsOutOfRange,
                "need atan(sqrt(sin2a/sin2b)) <= gamma <= atan(sqrt(sin2b/sin2a)), i.e. " + fmt(lo) +
                    " <= gamma <= " + fmt(hi) + " (gamma = " + fmt(p.gamma) + ")");
}

BasisInstance family_sep_not_locc(const FamilyParams& p) {
  validate(p);
  return family_unchecked(p.alpha, p.beta, p.gamma);
}

std::array<double, 3> family_concurrences(const FamilyParams& p) {
  const double sa = std::sin(2 * p.alpha), sb = std::sin(2 * p.beta);
  const double c2 = std::cos(p.gamma) * std::cos(p.gamma), s2 = std::sin(p.gamma) * std::sin(p.gamma);
  return {sa, std::abs(c2 * sa - s2 * sb), std::abs(s2 * sa - c2 * sb)};
}

BasisInstance basis_for_targets(double c1, double c2, double c3) {
  constexpr double eps = 1e-12;
  for (double c : {c1, c2, c3})
    if (!std::isfinite(c) || c < -eps) throw Error(ErrorCode::TargetsOutOfRange, "targets must be nonnegative");
  c1 = std::max(c1, 0.0);
  c2 = std::max(c2, 0.0);
  c3 = std::max(c3, 0.0);
  const double s = c1 + c2 + c3;
  if (s > 1.0 + eps) throw Error(ErrorCode::TargetsOutOfRange, "need c1 + c2 + c3 <= 1 (sum = " + fmt(s) + ")");
  if (s <= 0.0) {
    // product phi, product basis
    return BasisInstance{PureState::basis(kQubits, {0, 0}),
                         {PureState::basis(kQubits, {0, 1}), PureState::basis(kQubits, {1, 0}),
                          PureState::basis(kQubits, {1, 1})}};
  }
  const double beta = 0.5 * std::asin(std::min(1.0, s));
  const double alpha = 0.5 * std::asin(std::min(1.0, c1));
  const double gamma = std::asin(std::sqrt(std::clamp((c1 + c2) / (s + c1), 0.0, 1.0)));
  // c1 = 0 puts alpha on the open end of the family range; the formulas
  // still hold there.
  if (c1 > 0.0) return family_sep_not_locc({alpha, beta, gamma});
  return family_unchecked(alpha, beta, gamma);
}

bool in_tetrahedron(const TetraPoint& p, double tol) {
  const double x1 = p.x1, x2 = p.x2, x3 = p.x3;
  for (double x : {x1, x2, x3})
    if (!std::isfinite(x) || x < -tol || x > 1.0 + tol) return false;
  return x1 + x2 + x3 >= 1.0 - tol && x1 + x2 - x3 <= 1.0 + tol && x2 + x3 - x1 <= 1.0 + tol &&
         x3 + x1 - x2 <= 1.0 + tol;
}

namespace {

std::string tetra_violation(const TetraPoint& p) {
  const double x1 = p.x1, x2 = p.x2, x3 = p.x3;
  if (x1 < 0 || x2 < 0 || x3 < 0 || x1 > 1 || x2 > 1 || x3 > 1) return "0 <= x_k <= 1";
  if (x1 + x2 + x3 < 1) return "x1 + x2 + x3 >= 1";
  if (x1 + x2 - x3 > 1) return "x1 + x2 - x3 <= 1";
  if (x2 + x3 - x1 > 1) return "x2 + x3 - x1 <= 1";
  return "x3 + x1 - x2 <= 1";
}

}  // namespace

ComplexMatrix tetra_unitary(const TetraPoint& p) {
  if (!in_tetrahedron(p))
    throw Error(ErrorCode::PointOutsideTetrahedron,
                "(" + fmt(p.x1) + ", " + fmt(p.x2) + ", " + fmt(p.x3) + ") violates " + tetra_violation(p));
  std::array<double, 3> x{std::clamp(p.x1, 0.0, 1.0), std::clamp(p.x2, 0.0, 1.0), std::clamp(p.x3, 0.0, 1.0)};
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[a] > x[b]; });
  const double s1 = x[order[0]], s2 = x[order[1]], s3 = x[order[2]];

  if (s3 >= 1.0) return ComplexMatrix::Identity(3, 3);

  const auto root = [](double xk, double th) {
    const double c = std::cos(th);
    return std::sqrt(std::max(0.0, xk * xk - c * c));
  };
  const auto f = [&](double th) { return std::sin(th) - root(s1, th) - root(s2, th) - root(s3, th); };
  const auto g = [&](double th) { return std::sin(th) - root(s1, th) - root(s2, th) + root(s3, th); };
  const auto h = [&](double th) { return f(th) * g(th); };

  // h >= 0 at the left end, h <= 0 at pi/2.
  double lo = std::acos(s3), hi = kPi / 2;
  if (h(hi) > 0.0 && std::abs(h(hi)) > 1e-12) {
    throw Error(ErrorCode::PointOutsideTetrahedron, "no sign change of f*g on the bisection interval");
  }
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double hm = h(mid);
    if (std::abs(hm) < 1e-300) {
      lo = hi = mid;
      break;
    }
    if (hm > 0.0) lo = mid;
    else hi = mid;
  }
  double theta = std::abs(h(lo)) < std::abs(h(hi)) ? lo : hi;
  const bool use_g = std::abs(g(theta)) < std::abs(f(theta));

  const double st = std::sin(theta);
  std::array<double, 3> t{};
  t[0] = (st - root(s1, theta)) / (2 * st);
  t[1] = (st - root(s2, theta)) / (2 * st);
  t[2] = (st + (use_g ? 1.0 : -1.0) * root(s3, theta)) / (2 * st);
  Eigen::Vector3d c;
  for (int k = 0; k < 3; ++k) c(k) = std::sqrt(std::max(0.0, t[static_cast<std::size_t>(k)]));
  c /= c.norm();

  // Householder reflection taking e1 to -c; its negative has first column c.
  Eigen::Vector3d v = c;
  v(0) += 1.0;
  const Eigen::Matrix3d o = -(Eigen::Matrix3d::Identity() - 2.0 * v * v.transpose() / v.squaredNorm());

  ComplexMatrix u(3, 3);
  const Complex ph = std::polar(1.0, theta);
  for (int r = 0; r < 3; ++r) {
    u(r, 0) = o(r, 0);
    u(r, 1) = o(r, 1) * ph;
    u(r, 2) = o(r, 2) * ph;
  }
  ComplexMatrix out(3, 3);
  for (int r = 0; r < 3; ++r) out.row(order[static_cast<std::size_t>(r)]) = u.row(r);
  return out;
}

BasisInstance basis_from_unitary(const ComplexMatrix& u) {
  if (u.rows() != 3 || u.cols() != 3) throw Error(ErrorCode::NotUnitary, "expected a 3x3 matrix");
  if ((u.adjoint() * u - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() > 1e-9)
    throw Error(ErrorCode::NotUnitary, "U^dagger U differs from the identity");
  const auto& mb = magic_basis();
  BasisInstance out{mb[0], {}};
  for (int k = 0; k < 3; ++k) {
    ComplexVector v = ComplexVector::Zero(4);
    for (int l = 0; l < 3; ++l) v += u(k, l) * mb[static_cast<std::size_t>(l + 1)].amplitudes();
    out.basis.push_back(PureState::normalized(kQubits, v));
  }
  return out;
}

std::string_view to_string(SubspaceKind k) {
  switch (k) {
    case SubspaceKind::Bipartite3x3Dim7: return "dim7";
    case SubspaceKind::Tripartite222Dim6: return "dim6";
  }
  return "?";
}

SubspaceSpec indistinguishable_subspace(SubspaceKind kind) {
  SubspaceSpec spec;
  spec.kind = kind;
  if (kind == SubspaceKind::Bipartite3x3Dim7) {
    const StateSpace s{3, 3};
    ComplexVector v = ComplexVector::Zero(9);
    v(0) = v(4) = v(8) = 1.0;
    spec.phi1 = PureState::normalized(s, v);
    spec.phi2 = PureState::basis(s, {0, 1});
  } else {
    const StateSpace s{2, 2, 2};
    ComplexVector v = ComplexVector::Zero(8);
    v(1) = v(2) = v(4) = 1.0;
    spec.phi1 = PureState::normalized(s, v);
    spec.phi2 = PureState::basis(s, {0, 0, 0});
  }
  spec.complement = orthocomplement_basis(std::vector<PureState>{spec.phi1, spec.phi2});
  return spec;
}

std::optional<int> schmidt_number(const PureState& psi) {
  if (psi.space().parties() == 2) return schmidt_decompose(psi, {0}).rank;
  const auto cls = schmidt2_classify(psi);
  switch (cls.kind) {
    case Schmidt2Kind::Product: return 1;
    case Schmidt2Kind::Schmidt2: return 2;
    case Schmidt2Kind::AtLeast3: return cls.decomposition ? 2 : 3;
    case Schmidt2Kind::Undecided: return std::nullopt;
  }
  return std::nullopt;
}

SubspaceReport verify_P0_P1_P2(const PureState& phi1, const PureState& phi2) {
  if (!(phi1.space() == phi2.space())) throw Error(ErrorCode::DimensionMismatch, "states live in different spaces");
  const auto& space = phi1.space();
  SubspaceReport rep;

  // P0
  const SpanProducts sp = product_vectors_in_span(phi1, phi2);
  rep.p0.samples = 1;
  if (sp.infinitely_many) {
    rep.p0.failures = 1;
    rep.p0.detail = "span contains infinitely many product vectors";
  } else if (sp.vectors.size() != 1) {
    rep.p0.failures = 1;
    rep.p0.detail = "span contains " + std::to_string(sp.vectors.size()) + " product vectors";
  } else {
    rep.p0.pass = true;
    rep.product_vector = sp.vectors.front();
    rep.p0.detail = "unique product vector";
  }

  // P1: a phi1 + b phi2 with a != 0 on a 10 x 10 grid of magnitude ratio and phase.
  int worst = 3;
  for (int i = 0; i < 10; ++i) {
    const double t = -kPi / 2 + (i + 0.5) * kPi / 10;
    for (int j = 0; j < 10; ++j) {
      const Complex b = std::sin(t) * std::polar(1.0, 2 * kPi * j / 10);
      const ComplexVector v = std::cos(t) * phi1.amplitudes() + b * phi2.amplitudes();
      const auto sn = schmidt_number(PureState::normalized(space, v));
      ++rep.p1.samples;
      if (!sn || *sn != 3) {
        ++rep.p1.failures;
        worst = sn ? std::min(worst, *sn) : 0;
      }
    }
  }
  rep.p1.pass = rep.p1.failures == 0;
  rep.p1.detail = rep.p1.pass ? "Schmidt number 3 on every sample"
                              : std::to_string(rep.p1.failures) + " samples with Schmidt number " + std::to_string(worst);

  // P2: if a mixture in S had Schmidt number 2, its two-dimensional support
  // would hold phi2 and some phi1 - phi2/a; the latter always has number 3.
  for (int i = 0; i < 10; ++i) {
    const double r = 0.25 + 0.5 * i;
    for (int j = 0; j < 10; ++j) {
      const Complex a = std::polar(r, 2 * kPi * j / 10 + 0.1);
      const ComplexVector v = phi1.amplitudes() - phi2.amplitudes() / a;
      const auto sn = schmidt_number(PureState::normalized(space, v));
      ++rep.p2.samples;
      if (!sn || *sn != 3) ++rep.p2.failures;
    }
  }
  rep.p2.pass = rep.p0.pass && rep.p1.pass && rep.p2.failures == 0;
  rep.p2.detail = rep.p2.pass ? "P0 and P1 hold and every sampled phi1 - phi2/a has Schmidt number 3"
                              : "reduction failed (" + std::to_string(rep.p2.failures) + " bad samples)";
  return rep;
}

SubspaceReport verify_P0_P1_P2(const SubspaceSpec& spec) { return verify_P0_P1_P2(spec.phi1, spec.phi2); }

namespace {

using Factors = std::vector<ComplexVector>;

std::vector<Factors> standard_products(const std::vector<int>& dims) {
  std::vector<Factors> out{Factors{}};
  for (int d : dims) {
    std::vector<Factors> next;
    for (const auto& f : out)
      for (int i = 0; i < d; ++i) {
        Factors g = f;
        g.push_back(ComplexVector::Unit(d, i));
        next.push_back(std::move(g));
      }
    out = std::move(next);
  }
  return out;
}

std::optional<std::vector<Factors>> complete_rec(const std::vector<Factors>& vecs, const std::vector<int>& dims) {
  constexpr double tol = 1e-9;
  if (vecs.empty()) return standard_products(dims);
  if (dims.size() == 1) {
    std::vector<ComplexVector> local;
    for (const auto& v : vecs) local.push_back(v[0]);
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (std::abs(local[i].dot(local[j])) > tol) return std::nullopt;
    std::vector<Factors> out;
    for (auto& c : complete_orthonormal(local, dims[0])) out.push_back(Factors{std::move(c)});
    return out;
  }
  for (std::size_t p = 0; p < dims.size(); ++p) {
    // group by the line of the factor at p
    std::vector<ComplexVector> reps;
    std::vector<int> cls(vecs.size());
    bool ok = true;
    for (std::size_t i = 0; i < vecs.size() && ok; ++i) {
      const ComplexVector& f = vecs[i][p];
      int found = -1;
      for (std::size_t r = 0; r < reps.size(); ++r) {
        const double ov = std::abs(reps[r].dot(f));
        if (ov >= 1.0 - tol) {
          found = static_cast<int>(r);
          break;
        }
        if (ov > tol) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      if (found < 0) {
        found = static_cast<int>(reps.size());
        reps.push_back(f);
      }
      cls[i] = found;
    }
    if (!ok) continue;
    std::vector<ComplexVector> local = reps;
    for (auto& c : complete_orthonormal(reps, dims[p])) local.push_back(std::move(c));
    std::vector<int> sub_dims = dims;
    sub_dims.erase(sub_dims.begin() + static_cast<long>(p));
    std::vector<Factors> out;
    for (std::size_t b = 0; b < local.size() && ok; ++b) {
      std::vector<Factors> sub;
      for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (cls[i] != static_cast<int>(b)) continue;
        Factors g = vecs[i];
        g.erase(g.begin() + static_cast<long>(p));
        sub.push_back(std::move(g));
      }
      auto rec = complete_rec(sub, sub_dims);
      if (!rec) {
        ok = false;
        break;
      }
      for (auto& g : *rec) {
        g.insert(g.begin() + static_cast<long>(p), local[b]);
        out.push_back(std::move(g));
      }
    }
    if (ok) return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<ProductVector>> complete_product_basis(const std::vector<ProductVector>& vectors,
                                                                 const StateSpace& space) {
  std::vector<Factors> vecs;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.factors.size()) != space.parties())
      throw Error(ErrorCode::DimensionMismatch, "product vector has the wrong number of factors");
    Factors f;
    for (const auto& x : v.factors) f.push_back(x / x.norm());
    vecs.push_back(std::move(f));
  }
  auto rec = complete_rec(vecs, space.dims());
  if (!rec) return std::nullopt;
  std::vector<ProductVector> out;
  for (auto& f : *rec) out.push_back(ProductVector{std::move(f), 1.0});
  return out;
}

std::vector<PureState> locc_basis_sch2(const PureState& phi) {
  const auto cls = schmidt2_classify(phi);
  if (cls.kind != Schmidt2Kind::Schmidt2 || !cls.decomposition)
    throw Error(ErrorCode::WrongForm, "phi has no orthogonal two-term product decomposition (" +
                                          std::string(to_string(cls.kind)) + ": " + cls.detail + ")");
  const auto& space = phi.space();
  const auto form = orthogonal_form(*cls.decomposition, space);
  std::vector<PureState> basis;
  basis.push_back(PureState::normalized(
      space, std::sin(form.theta) * form.a_hat.amplitudes() - std::cos(form.theta) * form.b_hat.amplitudes()));
  ProductVector a = cls.decomposition->a, b = cls.decomposition->b;
  a.weight = b.weight = 1.0;
  const auto rest = complete_product_basis({a, b}, space);
  if (!rest) throw Error(ErrorCode::WrongForm, "could not complete the product pair to a product basis");
  for (const auto& pv : *rest) basis.push_back(pv.state(space));
  return basis;
}

}  // namespace sepdisc
