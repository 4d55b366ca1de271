#include <gtest/gtest.h>

#include "sepdisc/random.hpp"
#include "sepdisc/tensor_rank.hpp"
#include "test_util.hpp"

using namespace sepdisc;
using namespace sepdisc::test;

namespace {

ProductVector pv(std::vector<ComplexVector> f) { return ProductVector{std::move(f)}; }

ComplexVector e(int d, int i) {
  ComplexVector v = ComplexVector::Zero(d);
  v(i) = 1;
  return v;
}

bool contains_ray(const SpanProducts& sp, const ComplexVector& v) {
  for (const auto& p : sp.vectors) {
    const ComplexVector a = p.assemble();
    if (std::abs(a.dot(v)) / (a.norm() * v.norm()) > 1 - 1e-9) return true;
  }
  return false;
}

}  // namespace

TEST(Schmidt, Examples) {
  EXPECT_EQ(schmidt_decompose(PureState::basis(qubits2(), {0, 0}), {0}).rank, 1);
  const auto b = schmidt_decompose(phi_plus(), {0});
  ASSERT_EQ(b.rank, 2);
  EXPECT_NEAR(b.coefficients[0], kR, 1e-14);
  EXPECT_NEAR(b.coefficients[1], kR, 1e-14);
  const auto w = schmidt_decompose(w_state(), {0});
  ASSERT_EQ(w.rank, 2);
  EXPECT_NEAR(w.coefficients[0], std::sqrt(2.0 / 3), 1e-14);
  EXPECT_NEAR(w.coefficients[1], std::sqrt(1.0 / 3), 1e-14);
}

TEST(Schmidt, ReassemblyAndNormalization) {
  Rng rng(8);
  const StateSpace s{2, 3, 2};
  for (auto cut : std::vector<std::vector<int>>{{0}, {1}, {0, 2}}) {
    const PureState psi = random_state(s, rng);
    const auto info = schmidt_decompose(psi, cut);
    double n = 0.0;
    for (double c : info.coefficients) n += c * c;
    EXPECT_NEAR(n, 1.0, 1e-10);
    ComplexMatrix m = ComplexMatrix::Zero(info.left.rows(), info.right.rows());
    for (int i = 0; i < info.rank; ++i)
      m += info.coefficients[static_cast<std::size_t>(i)] * info.left.col(i) * info.right.col(i).transpose();
    EXPECT_LT(max_abs(m - cut_matrix(psi.amplitudes(), s, info.left_parties)), 1e-9);
  }
}

TEST(EntryDistance, Examples) {
  const ProductVector a = pv({e(2, 0), e(2, 0), e(2, 0)});
  EXPECT_EQ(entry_distance(a, a), 0);
  EXPECT_EQ(entry_distance(a, pv({e(2, 1), e(2, 1), e(2, 1)})), 3);
  EXPECT_EQ(entry_distance(a, pv({e(2, 0), e(2, 0), e(2, 1)})), 1);
  EXPECT_EQ(entry_distance(a, pv({Complex(0, 2) * e(2, 0), e(2, 0), e(2, 0)})), 0);
}

TEST(Factorize, ProductAndEntangled) {
  Rng rng(9);
  const StateSpace s{2, 3, 2};
  const PureState p = random_product_state(s, rng);
  const auto f = factorize(p.amplitudes(), s, 1e-9);
  ASSERT_TRUE(f);
  EXPECT_LT((f->assemble() - p.amplitudes()).norm(), 1e-12);
  EXPECT_TRUE(is_product(p));
  EXPECT_FALSE(is_product(w_state()));
  EXPECT_FALSE(factorize(phi_plus().amplitudes(), qubits2(), 1e-9));
}

TEST(SpanProducts, Examples) {
  const auto& q = qubits2();
  const auto a = product_vectors_in_span(PureState::basis(q, {0, 0}), PureState::basis(q, {1, 1}));
  EXPECT_FALSE(a.infinitely_many);
  ASSERT_EQ(a.vectors.size(), 2u);
  EXPECT_TRUE(contains_ray(a, PureState::basis(q, {0, 0}).amplitudes()));
  EXPECT_TRUE(contains_ray(a, PureState::basis(q, {1, 1}).amplitudes()));
  EXPECT_TRUE(product_vectors_in_span(PureState::basis(q, {0, 0}), PureState::basis(q, {0, 1})).infinitely_many);

  const StateSpace t{3, 3};
  const PureState f1 = ket(t, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}});
  const PureState f2 = PureState::basis(t, {0, 1});
  const auto c = product_vectors_in_span(f1, f2);
  EXPECT_FALSE(c.infinitely_many);
  ASSERT_EQ(c.vectors.size(), 1u);
  EXPECT_TRUE(contains_ray(c, f2.amplitudes()));
}

TEST(SpanProducts, CompletenessOnQubits) {
  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    const PureState x = random_state(qubits2(), rng), y = random_state(qubits2(), rng);
    const auto sp = product_vectors_in_span(x, y);
    EXPECT_FALSE(sp.infinitely_many);
    EXPECT_LE(sp.vectors.size(), 2u);
    for (const auto& v : sp.vectors) EXPECT_TRUE(factorize(v.assemble(), qubits2(), 1e-7));
    // roots of det(M_x + z M_y)
    const ComplexMatrix mx = coeff_matrix(x), my = coeff_matrix(y);
    const Complex a = my.determinant();
    const Complex c = mx.determinant();
    const Complex b = (mx + my).determinant() - a - c;
    const Complex disc = std::sqrt(b * b - 4.0 * a * c);
    for (Complex z : {(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)})
      EXPECT_TRUE(contains_ray(sp, x.amplitudes() + z * y.amplitudes())) << i;
  }
}

TEST(Classify, ReferenceStates) {
  for (double t : {0.2, kPi / 6, kPi / 4, 1.2}) {
    const auto c = schmidt2_classify(ghz(t));
    EXPECT_EQ(c.kind, Schmidt2Kind::Schmidt2) << t;
    ASSERT_TRUE(c.decomposition);
    EXPECT_TRUE(c.decomposition->orthogonal);
    EXPECT_TRUE(c.decomposition->unique);
    EXPECT_EQ(c.decomposition->entry_distance, 3);
    const ComplexVector sum = c.decomposition->a.assemble() + c.decomposition->b.assemble();
    EXPECT_LT((sum - ghz(t).amplitudes()).norm(), 1e-9);
  }
  EXPECT_EQ(schmidt2_classify(w_state()).kind, Schmidt2Kind::AtLeast3);
  for (double r : {0.2, 0.5, 1.0, 2.0, 5.0}) {
    const auto c = schmidt2_classify(zero_plus(1.0, r));
    EXPECT_EQ(c.kind, Schmidt2Kind::AtLeast3) << r;
    ASSERT_TRUE(c.decomposition);
    EXPECT_FALSE(c.decomposition->orthogonal);
    EXPECT_TRUE(c.decomposition->unique);
  }
  EXPECT_EQ(schmidt2_classify(PureState::basis(StateSpace{2, 2, 2}, {0, 1, 1})).kind, Schmidt2Kind::Product);
}

TEST(Classify, QubitPairsNeverAtLeast3) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const PureState psi = random_state(qubits2(), rng);
    const auto c = schmidt2_classify(psi);
    EXPECT_NE(c.kind, Schmidt2Kind::AtLeast3);
    if (c.kind == Schmidt2Kind::Product) EXPECT_LT(concurrence(psi), 1e-9);
  }
  EXPECT_EQ(schmidt2_classify(PureState::basis(qubits2(), {1, 0})).kind, Schmidt2Kind::Product);
}

TEST(Classify, DecompositionIsStableUnderCompanions) {
  // a + b at entry distance 3: a second look through the span with any
  // companion recovers the same pair.
  Rng rng(13);
  const StateSpace s{2, 2, 2};
  for (int i = 0; i < 20; ++i) {
    const PureState phi = [&] {
      std::vector<ComplexVector> fa, fb;
      for (int k = 0; k < 3; ++k) {
        fa.push_back(random_complex_vector(2, rng).normalized());
        fb.push_back(random_complex_vector(2, rng).normalized());
      }
      return PureState::normalized(s, PureState::product(s, fa).amplitudes() + PureState::product(s, fb).amplitudes());
    }();
    const auto c = schmidt2_classify(phi);
    ASSERT_TRUE(c.decomposition);
    const ComplexVector a = c.decomposition->a.assemble(), b = c.decomposition->b.assemble();
    const PureState companion = PureState::normalized(s, a - b);
    const auto sp = product_vectors_in_span(phi, companion);
    EXPECT_FALSE(sp.infinitely_many);
    EXPECT_EQ(sp.vectors.size(), 2u);
    EXPECT_TRUE(contains_ray(sp, a));
    EXPECT_TRUE(contains_ray(sp, b));
  }
}
