#include "sepdisc/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "sepdisc/config.hpp"
#include "sepdisc/error.hpp"
#include "sepdisc/separability.hpp"

namespace sepdisc {

namespace {

std::vector<std::vector<int>> default_cuts(const StateSpace& space) {
  const int k = space.parties();
  if (k == 2) return {{1}};
  // Every bipartition once: subsets not containing the last party.
  std::vector<std::vector<int>> cuts;
  for (int mask = 1; mask < (1 << (k - 1)); ++mask) {
    std::vector<int> s;
    for (int p = 0; p < k - 1; ++p)
      if (mask & (1 << p)) s.push_back(p);
    cuts.push_back(std::move(s));
  }
  return cuts;
}

ComplexMatrix hermitize(const ComplexMatrix& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace

FeasibilityProblem FeasibilityProblem::from_projectors(const StateSpace& space,
                                                       std::vector<ComplexMatrix> projectors) {
  if (projectors.empty()) throw Error(ErrorCode::InvalidInstance, "no projectors");
  const int d = space.total();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const auto& p = projectors[i];
    if (p.rows() != d || p.cols() != d) throw Error(ErrorCode::DimensionMismatch, "projector size mismatch");
    if (hermitian_defect(p) > 1e-8) throw Error(ErrorCode::InvalidInstance, "projector is not Hermitian");
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-8) throw Error(ErrorCode::InvalidInstance, "operator is not a projector");
    for (std::size_t j = 0; j < i; ++j)
      if ((p * projectors[j]).cwiseAbs().maxCoeff() > 1e-8)
        throw Error(ErrorCode::InvalidInstance, "projectors are not mutually orthogonal");
    sum += p;
  }
  FeasibilityProblem fp{space, std::move(projectors), hermitize(ComplexMatrix::Identity(d, d) - sum), default_cuts(space)};
  return fp;
}

namespace {

struct Residuals {
  double affine = 0, psd = 0, ppt = 0;
  double max() const { return std::max({affine, psd, ppt}); }
};

Residuals measure(const FeasibilityProblem& fp, const std::vector<ComplexMatrix>& e) {
  Residuals r;
  ComplexMatrix sum = -fp.residual;
  double leak = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    sum += e[k];
    leak = std::max(leak, (e[k] - fp.residual * e[k] * fp.residual).norm());
    r.psd = std::max(r.psd, -min_eigenvalue(e[k]));
    const ComplexMatrix m = fp.projectors[k] + e[k];
    for (const auto& cut : fp.cuts)
      r.ppt = std::max(r.ppt, -min_eigenvalue(partial_transpose(m, fp.space, cut)));
  }
  r.affine = sum.norm() + leak;
  r.psd = std::max(0.0, r.psd);
  r.ppt = std::max(0.0, r.ppt);
  return r;
}

double min_pt(const FeasibilityProblem& fp, std::size_t k, double e) {
  const ComplexMatrix m = fp.projectors[k] + e * fp.residual;
  double g = std::numeric_limits<double>::infinity();
  for (const auto& cut : fp.cuts) g = std::min(g, min_eigenvalue(partial_transpose(m, fp.space, cut)));
  return g;
}

// With rank P_0 = 1 the support constraint forces E_k = e_k P_0, e_k >= 0,
// sum e_k = 1. g_k(e) = min over cuts of lambda_min((P_k + e P_0)^Gamma) is
// concave, so {e : g_k(e) >= -tol} is an interval [a_k, b_k].
std::optional<std::vector<double>> scalar_solve(const FeasibilityProblem& fp, double tol) {
  const auto n = fp.projectors.size();
  std::vector<double> lo(n), hi(n);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    auto g = [&](double e) { return min_pt(fp, k, e); };
    double a = 0.0, b = 1.0;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double g1 = g(x1), g2 = g(x2);
    for (int it = 0; it < 80; ++it) {
      if (g1 < g2) {
        a = x1;
        x1 = x2;
        g1 = g2;
        x2 = a + phi * (b - a);
        g2 = g(x2);
      } else {
        b = x2;
        x2 = x1;
        g2 = g1;
        x1 = b - phi * (b - a);
        g1 = g(x1);
      }
    }
    double top = 0.5 * (a + b);
    for (double e : {0.0, 1.0})
      if (g(e) > g(top)) top = e;
    if (g(top) < -tol) return std::nullopt;
    auto edge = [&](double inside, double outside) {
      if (g(outside) >= -tol) return outside;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (inside + outside);
        (g(mid) >= -tol ? inside : outside) = mid;
      }
      return inside;
    };
    lo[k] = edge(top, 0.0);
    hi[k] = edge(top, 1.0);
  }
  double sum_lo = 0.0, sum_hi = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum_lo += lo[k];
    sum_hi += hi[k];
  }
  if (sum_lo > 1.0 || sum_hi < 1.0) return std::nullopt;
  const double t = sum_hi > sum_lo ? (1.0 - sum_lo) / (sum_hi - sum_lo) : 0.0;
  std::vector<double> e(n);
  for (std::size_t k = 0; k < n; ++k) e[k] = lo[k] + t * (hi[k] - lo[k]);
  return e;
}

}  // namespace

FeasibilityResult feasibility_solve(const FeasibilityProblem& fp) {
  const auto n = fp.projectors.size();
  if (n == 0) throw Error(ErrorCode::InvalidInstance, "no projectors");
  if (fp.try_scalar && std::abs(fp.residual.trace().real() - 1.0) < 1e-8) {
    if (auto e = scalar_solve(fp, 1e-11)) {
      FeasibilityResult res;
      for (double ek : *e) res.operators.push_back(ek * fp.residual);
      const Residuals r = measure(fp, res.operators);
      if (r.max() < fp.feasible_tol) {
        res.diagnostics.residual = r.max();
        res.diagnostics.affine_residual = r.affine;
        res.diagnostics.psd_violation = r.psd;
        res.diagnostics.ppt_violation = r.ppt;
        res.diagnostics.converged = r.max() <= fp.target;
        res.diagnostics.scalar_reduction = true;
        res.feasible = true;
        res.exact = ppt_is_exact(fp.space);
        return res;
      }
    }
  }
  const auto& pi = fp.residual;
  const int d = fp.space.total();

  std::vector<ComplexMatrix> x(n, pi / static_cast<double>(n));
  const std::size_t n_sets = 2 + fp.cuts.size();  // PSD, one per cut, affine
  std::vector<std::vector<ComplexMatrix>> y(n_sets, std::vector<ComplexMatrix>(n, ComplexMatrix::Zero(d, d)));
  std::vector<ComplexMatrix> z(n);

  auto project = [&](std::size_t s) {
    if (s == 0) {
      for (std::size_t k = 0; k < n; ++k) x[k] = project_psd(z[k]);
    } else if (s + 1 < n_sets) {
      const auto& cut = fp.cuts[s - 1];
      for (std::size_t k = 0; k < n; ++k) {
        const ComplexMatrix m = partial_transpose(fp.projectors[k] + z[k], fp.space, cut);
        x[k] = partial_transpose(project_psd(m), fp.space, cut) - fp.projectors[k];
      }
    } else {
      ComplexMatrix sum = ComplexMatrix::Zero(d, d);
      for (std::size_t k = 0; k < n; ++k) {
        x[k] = hermitize(pi * z[k] * pi);
        sum += x[k];
      }
      const ComplexMatrix fix = (pi - sum) / static_cast<double>(n);
      for (auto& xk : x) xk += fix;
    }
  };

  FeasibilityResult res;
  std::vector<std::pair<int, double>> history;
  Residuals last = measure(fp, x);
  int it = 0;
  while (last.max() > fp.target && it < fp.max_iterations) {
    ++it;
    for (std::size_t s = 0; s < n_sets; ++s) {
      for (std::size_t k = 0; k < n; ++k) z[k] = x[k] + y[s][k];
      project(s);
      for (std::size_t k = 0; k < n; ++k) y[s][k] = z[k] - x[k];
    }
    if (it % fp.check_every == 0 || it == fp.max_iterations) {
      last = measure(fp, x);
      history.emplace_back(it, last.max());
      if (it >= fp.stall_window) {
        // residual recorded stall_window iterations ago
        const auto old = std::find_if(history.begin(), history.end(),
                                      [&](const auto& h) { return h.first >= it - fp.stall_window; });
        const double gain = old != history.end() ? old->second - last.max() : 0.0;
        const double now = last.max();
        const bool flat = gain < fp.stall_improvement || (now > fp.feasible_tol && gain < fp.stall_relative * now);
        if (old != history.end() && old->first < it && flat) {
          res.diagnostics.stalled = true;
          break;
        }
      }
    }
  }

  res.operators = std::move(x);
  res.diagnostics.iterations = it;
  res.diagnostics.residual = last.max();
  res.diagnostics.affine_residual = last.affine;
  res.diagnostics.psd_violation = last.psd;
  res.diagnostics.ppt_violation = last.ppt;
  res.diagnostics.converged = last.max() <= fp.target;
  res.feasible = last.max() < fp.feasible_tol;
  res.exact = ppt_is_exact(fp.space);
  return res;
}

}  // namespace sepdisc
