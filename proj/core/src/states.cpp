#include "sepdisc/states.hpp"

#include <cmath>

#include "sepdisc/config.hpp"
#include "sepdisc/error.hpp"

namespace sepdisc {

PureState::PureState(StateSpace space, ComplexVector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.total())
    throw Error(ErrorCode::DimensionMismatch,
                "amplitude vector has length " + std::to_string(amplitudes_.size()) + ", space " +
                    space_.to_string() + " needs " + std::to_string(space_.total()));
  if (!amplitudes_.allFinite()) throw Error(ErrorCode::PreconditionViolated, "non-finite amplitude");
  const double defect = std::abs(amplitudes_.norm() - 1.0);
  if (defect > tolerances().unit_norm)
    throw Error(ErrorCode::PreconditionViolated, "state norm differs from 1 by " + std::to_string(defect));
}

PureState PureState::normalized(StateSpace space, ComplexVector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::PreconditionViolated, "cannot normalize zero vector");
  return PureState(std::move(space), amplitudes / n);
}

PureState PureState::basis(const StateSpace& space, const std::vector<int>& digits) {
  if (static_cast<int>(digits.size()) != space.parties())
    throw Error(ErrorCode::DimensionMismatch, "one digit per party expected");
  for (int k = 0; k < space.parties(); ++k)
    if (digits[static_cast<std::size_t>(k)] < 0 || digits[static_cast<std::size_t>(k)] >= space.dim(k))
      throw Error(ErrorCode::DimensionMismatch, "digit out of range");
  return PureState(space, ComplexVector::Unit(space.total(), space.index(digits)));
}

PureState PureState::product(const StateSpace& space, const std::vector<ComplexVector>& factors) {
  if (static_cast<int>(factors.size()) != space.parties())
    throw Error(ErrorCode::DimensionMismatch, "one factor per party expected");
  ComplexVector v = ComplexVector::Ones(1);
  for (int k = 0; k < space.parties(); ++k) {
    const auto& f = factors[static_cast<std::size_t>(k)];
    if (f.size() != space.dim(k)) throw Error(ErrorCode::DimensionMismatch, "factor length mismatch");
    v = kron(v, f);
  }
  return normalized(space, v);
}

Complex PureState::inner(const PureState& other) const {
  if (!(space_ == other.space_)) throw Error(ErrorCode::DimensionMismatch, "states live in different spaces");
  return amplitudes_.dot(other.amplitudes_);
}

bool PureState::same_ray(const PureState& other, double tol) const {
  return std::abs(inner(other)) >= 1.0 - tol;
}

double MagicBasisCoords::concurrence() const {
  Complex s = 0.0;
  for (const auto& l : lambdas) s += l * l;
  return std::abs(s);
}

const std::array<PureState, 4>& magic_basis() {
  static const std::array<PureState, 4> basis = [] {
    const StateSpace qq{2, 2};
    const double r = 1.0 / std::sqrt(2.0);
    ComplexVector m1(4), m2(4), m3(4), m4(4);
    m1 << r, 0, 0, r;
    m2 << kI * r, 0, 0, -kI * r;
    m3 << 0, kI * r, kI * r, 0;
    m4 << 0, r, -r, 0;
    return std::array<PureState, 4>{PureState(qq, m1), PureState(qq, m2), PureState(qq, m3),
                                    PureState(qq, m4)};
  }();
  return basis;
}

namespace {
void require_two_qubits(const PureState& psi) {
  if (!(psi.space() == StateSpace{2, 2}))
    throw Error(ErrorCode::WrongSpace, "expected a 2x2 state, got " + psi.space().to_string());
}
}  // namespace

ComplexMatrix coeff_matrix(const PureState& psi) {
  require_two_qubits(psi);
  const double s2 = std::sqrt(2.0);
  const auto& a = psi.amplitudes();
  ComplexMatrix m(2, 2);
  // (I (x) M)|Phi+> = sum_i |i> (x) M|i> / sqrt2, so <ij|psi> = M(j, i) / sqrt2.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(j, i) = s2 * a(2 * i + j);
  return m;
}

ComplexVector from_coeff_matrix(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "expected 2x2 matrix");
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector a(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(2 * i + j) = r * m(j, i);
  return a;
}

double concurrence(const PureState& psi) {
  const ComplexMatrix m = coeff_matrix(psi);
  return std::min(1.0, std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)));
}

MagicBasisCoords magic_coords(const PureState& psi) {
  require_two_qubits(psi);
  MagicBasisCoords c;
  const auto& mb = magic_basis();
  for (std::size_t k = 0; k < 4; ++k) c.lambdas[k] = mb[k].inner(psi);
  return c;
}

std::vector<PureState> orthocomplement_basis(const std::vector<PureState>& states) {
  if (states.empty()) throw Error(ErrorCode::PreconditionViolated, "need at least one state");
  const auto& space = states.front().space();
  std::vector<ComplexVector> vecs;
  vecs.reserve(states.size());
  for (const auto& s : states) {
    if (!(s.space() == space)) throw Error(ErrorCode::DimensionMismatch, "states live in different spaces");
    vecs.push_back(s.amplitudes());
  }
  if (orthonormality_defect(states) > 1e-8)
    throw Error(ErrorCode::PreconditionViolated, "spanning states are not orthonormal");
  std::vector<PureState> out;
  for (auto& v : complete_orthonormal(vecs, space.total())) out.emplace_back(space, std::move(v));
  return out;
}

std::vector<PureState> orthocomplement_basis(const PureState& phi) {
  return orthocomplement_basis(std::vector<PureState>{phi});
}

ComplexMatrix gram(const std::vector<PureState>& states) {
  const auto n = static_cast<Eigen::Index>(states.size());
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = states[static_cast<std::size_t>(i)].inner(states[static_cast<std::size_t>(j)]);
  return g;
}

double orthonormality_defect(const std::vector<PureState>& states) {
  if (states.empty()) return 0.0;
  const ComplexMatrix g = gram(states);
  return (g - ComplexMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

}  // namespace sepdisc
