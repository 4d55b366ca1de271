#include "sepdisc/random.hpp"

namespace sepdisc {

ComplexVector random_complex_vector(int n, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(nd(rng), nd(rng));
  return v;
}

ComplexMatrix random_unitary(int n, Rng& rng) {
  ComplexMatrix g(n, n);
  for (int c = 0; c < n; ++c) g.col(c) = random_complex_vector(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double a = std::abs(d);
    if (a > 0.0) q.col(i) *= d / a;
  }
  return q;
}

PureState random_state(const StateSpace& space, Rng& rng) {
  return PureState::normalized(space, random_complex_vector(space.total(), rng));
}

PureState random_product_state(const StateSpace& space, Rng& rng) {
  std::vector<ComplexVector> f;
  for (int k = 0; k < space.parties(); ++k) f.push_back(random_complex_vector(space.dim(k), rng));
  return PureState::product(space, f);
}

ComplexMatrix random_local_unitary(const StateSpace& space, Rng& rng) {
  ComplexMatrix u = ComplexMatrix::Ones(1, 1);
  for (int k = 0; k < space.parties(); ++k) u = kron(u, random_unitary(space.dim(k), rng));
  return u;
}

std::vector<PureState> random_orthocomplement_basis(const std::vector<PureState>& fixed, Rng& rng) {
  const auto base = orthocomplement_basis(fixed);
  const auto& space = fixed.front().space();
  const int m = static_cast<int>(base.size());
  const ComplexMatrix u = random_unitary(m, rng);
  std::vector<PureState> out;
  for (int k = 0; k < m; ++k) {
    ComplexVector v = ComplexVector::Zero(space.total());
    for (int l = 0; l < m; ++l) v += u(k, l) * base[static_cast<std::size_t>(l)].amplitudes();
    out.push_back(PureState::normalized(space, v));
  }
  return out;
}

std::vector<PureState> random_product_basis(const StateSpace& space, Rng& rng) {
  std::vector<ComplexMatrix> local;
  for (int k = 0; k < space.parties(); ++k) local.push_back(random_unitary(space.dim(k), rng));
  std::vector<PureState> out;
  for (int i = 0; i < space.total(); ++i) {
    const auto d = space.digits(i);
    std::vector<ComplexVector> f;
    for (int k = 0; k < space.parties(); ++k)
      f.emplace_back(local[static_cast<std::size_t>(k)].col(d[static_cast<std::size_t>(k)]));
    out.push_back(PureState::product(space, f));
  }
  return out;
}

}  // namespace sepdisc
