#include "sepdisc/tensor_rank.hpp"

#include <algorithm>
#include <cmath>

#include "sepdisc/config.hpp"
#include "sepdisc/error.hpp"

namespace sepdisc {

ComplexVector ProductVector::assemble() const {
  ComplexVector v = ComplexVector::Ones(1);
  for (const auto& f : factors) v = kron(v, f);
  return weight * v;
}

double ProductVector::norm() const {
  double n = std::abs(weight);
  for (const auto& f : factors) n *= f.norm();
  return n;
}

PureState ProductVector::state(const StateSpace& space) const {
  return PureState::normalized(space, assemble());
}

ComplexMatrix cut_matrix(const ComplexVector& amplitudes, const StateSpace& space,
                         const std::vector<int>& left_parties) {
  if (amplitudes.size() != space.total())
    throw Error(ErrorCode::DimensionMismatch, "amplitude length does not match the space");
  const auto right_parties = space.complement(left_parties);
  int rows = 1, cols = 1;
  for (int p : left_parties) rows *= space.dim(p);
  for (int p : right_parties) cols *= space.dim(p);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < space.total(); ++i) {
    const auto d = space.digits(i);
    int r = 0, c = 0;
    for (int p : left_parties) r = r * space.dim(p) + d[static_cast<std::size_t>(p)];
    for (int p : right_parties) c = c * space.dim(p) + d[static_cast<std::size_t>(p)];
    m(r, c) = amplitudes(i);
  }
  return m;
}

SchmidtInfo schmidt_decompose(const PureState& psi, std::vector<int> left_parties) {
  left_parties = normalize_bipartition(psi.space(), std::move(left_parties));
  const ComplexMatrix m = cut_matrix(psi.amplitudes(), psi.space(), left_parties);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  SchmidtInfo info;
  info.left_parties = left_parties;
  const double tol = tolerances().rank * (s.size() ? s(0) : 0.0);
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol) info.coefficients.push_back(s(i));
  info.rank = static_cast<int>(info.coefficients.size());
  info.left = svd.matrixU().leftCols(info.rank);
  info.right = svd.matrixV().leftCols(info.rank).conjugate();
  return info;
}

std::optional<ProductVector> factorize(const ComplexVector& v, const StateSpace& space, double rel_tol) {
  if (v.size() != space.total()) throw Error(ErrorCode::DimensionMismatch, "vector length does not match the space");
  if (!(v.norm() > 0.0)) return std::nullopt;
  ProductVector out;
  ComplexVector rest = v;
  for (int k = 0; k + 1 < space.parties(); ++k) {
    const int dk = space.dim(k);
    const auto other = static_cast<int>(rest.size()) / dk;
    // rest is row-major over (party k, remaining parties)
    ComplexMatrix m(dk, other);
    for (int i = 0; i < dk; ++i)
      for (int j = 0; j < other; ++j) m(i, j) = rest(i * other + j);
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    if (s.size() > 1 && s(1) > rel_tol * s(0)) return std::nullopt;
    out.factors.emplace_back(svd.matrixU().col(0));
    rest = s(0) * svd.matrixV().col(0).conjugate();
  }
  const double n = rest.norm();
  out.factors.emplace_back(rest / n);
  out.weight = n;
  return out;
}

bool is_product(const PureState& psi) {
  return factorize(psi.amplitudes(), psi.space(), tolerances().rank).has_value();
}

int entry_distance(const ProductVector& a, const ProductVector& b) {
  if (a.factors.size() != b.factors.size())
    throw Error(ErrorCode::DimensionMismatch, "product vectors have different party counts");
  int h = 0;
  for (std::size_t k = 0; k < a.factors.size(); ++k) {
    const auto& x = a.factors[k];
    const auto& y = b.factors[k];
    if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "factor dimensions differ");
    const ComplexVector xh = x / x.norm();
    const ComplexVector yh = y / y.norm();
    const double off_line = (yh - xh * xh.dot(yh)).norm();
    if (off_line > 1e-9) ++h;
  }
  return h;
}

namespace {

struct Quadratic {
  Complex c0, c1, c2;  // c0 + c1 z + c2 z^2
  double magnitude() const { return std::max({std::abs(c0), std::abs(c1), std::abs(c2)}); }
  Complex eval(Complex z) const { return c0 + z * (c1 + z * c2); }
  Complex derivative(Complex z) const { return c1 + 2.0 * c2 * z; }
};

// 2x2 minors of (X + zY) across every single-party cut that matters.
std::vector<Quadratic> minor_polynomials(const ComplexVector& x, const ComplexVector& y,
                                         const StateSpace& space) {
  std::vector<Quadratic> out;
  const int cuts = space.parties() == 2 ? 1 : space.parties();
  for (int k = 0; k < cuts; ++k) {
    const ComplexMatrix mx = cut_matrix(x, space, {k});
    const ComplexMatrix my = cut_matrix(y, space, {k});
    for (Eigen::Index r1 = 0; r1 < mx.rows(); ++r1)
      for (Eigen::Index r2 = r1 + 1; r2 < mx.rows(); ++r2)
        for (Eigen::Index q1 = 0; q1 < mx.cols(); ++q1)
          for (Eigen::Index q2 = q1 + 1; q2 < mx.cols(); ++q2) {
            const Complex a = mx(r1, q1), d = mx(r2, q2), c = mx(r1, q2), g = mx(r2, q1);
            const Complex b = my(r1, q1), e = my(r2, q2), f = my(r1, q2), h = my(r2, q1);
            out.push_back({a * d - c * g, a * e + b * d - c * h - f * g, b * e - f * h});
          }
  }
  return out;
}

std::vector<Complex> roots_of(const Quadratic& p) {
  const double eps = 1e-12 * p.magnitude();
  if (std::abs(p.c2) > eps) {
    const Complex sq = std::sqrt(p.c1 * p.c1 - 4.0 * p.c2 * p.c0);
    const Complex sgn = (std::real(std::conj(p.c1) * sq) >= 0.0) ? 1.0 : -1.0;
    const Complex q = -0.5 * (p.c1 + sgn * sq);
    std::vector<Complex> r;
    if (std::abs(q) > 0.0) {
      r.push_back(q / p.c2);
      r.push_back(p.c0 / q);
    } else {
      r.push_back(0.0);
      r.push_back(0.0);
    }
    return r;
  }
  if (std::abs(p.c1) > eps) return {-p.c0 / p.c1};
  return {};
}

// Gauss-Newton on sum |p_i(z)|^2; keeps the starting point unless it improves.
Complex refine_root(Complex z, const std::vector<Quadratic>& polys) {
  const auto residual = [&](Complex w) {
    double s = 0.0;
    for (const auto& p : polys) s += std::norm(p.eval(w));
    return s;
  };
  double best = residual(z);
  for (int it = 0; it < 8; ++it) {
    Complex num = 0.0;
    double den = 0.0;
    for (const auto& p : polys) {
      const Complex d = p.derivative(z);
      num += std::conj(d) * p.eval(z);
      den += std::norm(d);
    }
    if (!(den > 0.0)) break;
    const Complex next = z - num / den;
    const double r = residual(next);
    if (!(r < best)) break;
    z = next;
    best = r;
  }
  return z;
}

void add_unique(std::vector<ProductVector>& out, ProductVector v, const StateSpace& space) {
  const ComplexVector cand = v.assemble().normalized();
  for (const auto& existing : out) {
    const ComplexVector e = existing.assemble().normalized();
    if (std::abs(e.dot(cand)) > 1.0 - 1e-9) return;
  }
  // normalize to unit weight magnitude
  const double n = v.norm();
  v.weight /= n;
  for (auto& f : v.factors) {
    const double fn = f.norm();
    f /= fn;
    v.weight *= fn;
  }
  (void)space;
  out.push_back(std::move(v));
}

}  // namespace

SpanProducts product_vectors_in_span(const ComplexVector& x, const ComplexVector& y,
                                     const StateSpace& space) {
  if (x.size() != space.total() || y.size() != space.total())
    throw Error(ErrorCode::DimensionMismatch, "vectors do not match the space");
  {
    ComplexMatrix pair(x.size(), 2);
    pair.col(0) = x;
    pair.col(1) = y;
    if (numerical_rank(pair, tolerances().rank) < 2)
      throw Error(ErrorCode::NotIndependent, "spanning vectors are linearly dependent");
  }
  const double scale = x.norm() * y.norm();
  const auto polys = minor_polynomials(x / x.norm(), y / y.norm(), space);
  const ComplexVector xs = x / x.norm();
  const ComplexVector ys = y / y.norm();

  SpanProducts out;
  const Quadratic* pick = nullptr;
  for (const auto& p : polys)
    if (pick == nullptr || p.magnitude() > pick->magnitude()) pick = &p;
  if (pick == nullptr || pick->magnitude() <= 1e-12) {
    out.infinitely_many = true;
    return out;
  }
  (void)scale;

  const double check = tolerances().root_check;
  for (Complex z : roots_of(*pick)) {
    z = refine_root(z, polys);
    const ComplexVector v = xs + z * ys;
    if (!(v.norm() > 0.0) || !v.allFinite()) continue;
    if (auto pv = factorize(v / v.norm(), space, check)) add_unique(out.vectors, std::move(*pv), space);
  }
  if (auto pv = factorize(ys, space, check)) add_unique(out.vectors, std::move(*pv), space);

  if (out.vectors.size() > 2) {
    out.infinitely_many = true;
    out.vectors.clear();
  }
  return out;
}

SpanProducts product_vectors_in_span(const PureState& psi, const PureState& phi) {
  if (!(psi.space() == phi.space())) throw Error(ErrorCode::DimensionMismatch, "states live in different spaces");
  return product_vectors_in_span(psi.amplitudes(), phi.amplitudes(), psi.space());
}

OrthogonalSchmidt2 orthogonal_form(const Schmidt2Decomposition& d, const StateSpace& space) {
  if (!d.orthogonal) throw Error(ErrorCode::WrongForm, "decomposition is not orthogonal");
  const double na = d.a.norm();
  const double nb = d.b.norm();
  OrthogonalSchmidt2 out;
  out.theta = std::atan2(nb, na);
  out.a_hat = PureState::normalized(space, d.a.assemble());
  out.b_hat = PureState::normalized(space, d.b.assemble());
  return out;
}

std::string_view to_string(Schmidt2Kind k) {
  switch (k) {
    case Schmidt2Kind::Product: return "product";
    case Schmidt2Kind::Schmidt2: return "schmidt2";
    case Schmidt2Kind::AtLeast3: return "at_least_3";
    case Schmidt2Kind::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

// Contract the fixed local factors out of `v`, leaving a vector over `keep`.
ComplexVector contract_factors(const ComplexVector& v, const StateSpace& space,
                               const std::vector<int>& fixed, const std::vector<ComplexVector>& factors,
                               const std::vector<int>& keep) {
  int kept_dim = 1;
  for (int p : keep) kept_dim *= space.dim(p);
  ComplexVector out = ComplexVector::Zero(kept_dim);
  for (int i = 0; i < space.total(); ++i) {
    const auto d = space.digits(i);
    Complex w = v(i);
    for (std::size_t f = 0; f < fixed.size(); ++f)
      w *= std::conj(factors[f](d[static_cast<std::size_t>(fixed[f])]));
    int idx = 0;
    for (int p : keep) idx = idx * space.dim(p) + d[static_cast<std::size_t>(p)];
    out(idx) += w;
  }
  return out;
}

// Factors given per party (in `keep` order) merged with the fixed ones.
ProductVector lift(const std::vector<int>& fixed, const std::vector<ComplexVector>& fixed_factors,
                   const std::vector<int>& keep, const std::vector<ComplexVector>& keep_factors,
                   Complex weight, int parties) {
  ProductVector pv;
  pv.factors.resize(static_cast<std::size_t>(parties));
  for (std::size_t i = 0; i < fixed.size(); ++i) pv.factors[static_cast<std::size_t>(fixed[i])] = fixed_factors[i];
  for (std::size_t i = 0; i < keep.size(); ++i) pv.factors[static_cast<std::size_t>(keep[i])] = keep_factors[i];
  pv.weight = weight;
  return pv;
}

}  // namespace

Schmidt2Classification schmidt2_classify(const PureState& phi) {
  const auto& space = phi.space();
  const double tol = tolerances().rank;
  Schmidt2Classification out;

  std::vector<int> fixed, keep;
  std::vector<ComplexVector> fixed_factors;
  for (int k = 0; k < space.parties(); ++k) {
    const auto info = schmidt_decompose(phi, {k});
    if (info.rank >= 3) {
      out.kind = Schmidt2Kind::AtLeast3;
      out.detail = "party " + std::to_string(k) + " cut has Schmidt rank " + std::to_string(info.rank);
      return out;
    }
    if (info.rank == 1) {
      fixed.push_back(k);
      fixed_factors.emplace_back(info.left.col(0));
    } else {
      keep.push_back(k);
    }
  }
  out.product_parties = fixed;
  if (keep.empty()) {
    out.kind = Schmidt2Kind::Product;
    out.detail = "every single-party cut has rank one";
    return out;
  }
  if (keep.size() == 1) {
    out.kind = Schmidt2Kind::Undecided;
    out.detail = "inconsistent cut ranks";
    return out;
  }

  const ComplexVector core = contract_factors(phi.amplitudes(), space, fixed, fixed_factors, keep);
  const StateSpace core_space = space.restricted(keep);
  const int parties = space.parties();

  if (keep.size() == 2) {
    // Bipartite core: the singular value decomposition is an orthogonal
    // two-term decomposition, never unique.
    const ComplexMatrix m = cut_matrix(core, core_space, {0});
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    Schmidt2Decomposition d;
    d.a = lift(fixed, fixed_factors, keep,
               {ComplexVector(svd.matrixU().col(0)), ComplexVector(svd.matrixV().col(0).conjugate())}, s(0), parties);
    d.b = lift(fixed, fixed_factors, keep,
               {ComplexVector(svd.matrixU().col(1)), ComplexVector(svd.matrixV().col(1).conjugate())}, s(1), parties);
    d.orthogonal = true;
    d.unique = false;
    d.entry_distance = entry_distance(d.a, d.b);
    out.kind = Schmidt2Kind::Schmidt2;
    out.decomposition = d;
    out.detail = "bipartite core on parties " + std::to_string(keep[0]) + "," + std::to_string(keep[1]);
    return out;
  }

  // Three or more entangled parties: split off the first one; the remaining
  // factors of any two-term decomposition are the product vectors in the
  // span of the right Schmidt vectors.
  const ComplexMatrix m = cut_matrix(core, core_space, {0});
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const ComplexVector w1 = svd.matrixV().col(0).conjugate();
  const ComplexVector w2 = svd.matrixV().col(1).conjugate();
  std::vector<int> rest_idx;
  for (int i = 1; i < static_cast<int>(keep.size()); ++i) rest_idx.push_back(i);
  const StateSpace rest_space = core_space.restricted(rest_idx);
  const SpanProducts span = product_vectors_in_span(w1, w2, rest_space);
  if (span.infinitely_many) {
    out.kind = Schmidt2Kind::Undecided;
    out.detail = "rest span is entirely product although every cut has rank two";
    return out;
  }
  if (span.vectors.size() < 2) {
    out.kind = Schmidt2Kind::AtLeast3;
    out.detail = "fewer than two product vectors in the complementary span; tensor rank >= 3";
    return out;
  }

  const ComplexVector u = span.vectors[0].assemble();
  const ComplexVector v = span.vectors[1].assemble();
  ComplexMatrix basis(u.size(), 2);
  basis.col(0) = u;
  basis.col(1) = v;
  // m = X * basis^T  =>  X^T = basis^+ m^T
  const ComplexMatrix xt = basis.colPivHouseholderQr().solve(m.transpose());
  const ComplexVector x = xt.row(0).transpose();
  const ComplexVector y = xt.row(1).transpose();
  const ComplexVector rebuilt = kron(x, u) + kron(y, v);
  if ((rebuilt - core).norm() > 1e-8) {
    out.kind = Schmidt2Kind::Undecided;
    out.detail = "two-term reconstruction failed";
    return out;
  }

  const auto assemble_side = [&](const ComplexVector& local, const ProductVector& restv) {
    std::vector<ComplexVector> f;
    f.emplace_back(local / local.norm());
    for (const auto& rf : restv.factors) f.push_back(rf);
    return lift(fixed, fixed_factors, keep, f, local.norm() * restv.weight, parties);
  };
  Schmidt2Decomposition d;
  d.a = assemble_side(x, span.vectors[0]);
  d.b = assemble_side(y, span.vectors[1]);
  d.entry_distance = entry_distance(d.a, d.b);
  d.unique = true;
  const Complex overlap = d.a.assemble().dot(d.b.assemble());
  d.orthogonal = std::abs(overlap) <= tol * std::max(1.0, d.a.norm() * d.b.norm()) * 10.0;
  out.decomposition = d;
  if (!d.orthogonal) {
    out.kind = Schmidt2Kind::AtLeast3;
    out.detail = "unique two-term decomposition is not orthogonal; Sch_perp >= 3";
    return out;
  }
  out.kind = Schmidt2Kind::Schmidt2;
  out.detail = "unique orthogonal two-term decomposition";
  return out;
}

}  // namespace sepdisc
