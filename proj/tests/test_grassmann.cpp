#include <gtest/gtest.h>

#include <numeric>

#include "flamingo/combinat.hpp"
#include "flamingo/error.hpp"
#include "flamingo/grassmann.hpp"
#include "flamingo/invariants.hpp"
#include "oracles.hpp"

using namespace flamingo;

namespace {

Integer plucker(const IntMatrix& big, const IndexSet& k) {
  oracle::Dense sub;
  for (int i = 1; i <= big.rows(); ++i) {
    std::vector<Integer> row;
    for (int c : k) row.push_back(big.at(i, c));
    sub.push_back(std::move(row));
  }
  return oracle::laplace_det(sub);
}

}  // namespace

TEST(Phi, Shape) {
  IntMatrix m(3, 3);
  m.at(1, 2) = 7;
  const IntMatrix big = phi(m);
  EXPECT_EQ(big.rows(), 3);
  EXPECT_EQ(big.cols(), 6);
  EXPECT_EQ(big.at(1, 1), 1);
  EXPECT_EQ(big.at(2, 2), -1);
  EXPECT_EQ(big.at(3, 3), 1);
  EXPECT_EQ(big.at(1, 5), 7);
  EXPECT_EQ(delta_index_set({1, 3}, {2, 3}, 3), (IndexSet{2, 5, 6}));
}

TEST(DeltaToMinor, NumericIdentity) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 5; ++n) {
    const IntMatrix m = oracle::random_matrix(n, n, rng);
    const IntMatrix big = phi(m);
    std::vector<char> mask(static_cast<std::size_t>(2 * n), 0);
    std::fill(mask.begin(), mask.begin() + n, 1);
    do {
      IndexSet k;
      for (int c = 1; c <= 2 * n; ++c) {
        if (mask[static_cast<std::size_t>(c - 1)]) k.push_back(c);
      }
      const auto dm = delta_to_minor(k, n);
      ASSERT_EQ(plucker(big, k), dm.sign * evaluate(minor(dm.minor, n, n), m));
      ASSERT_EQ(delta_index_set(dm.minor.rows, dm.minor.cols, n), k);
      ASSERT_EQ(dm.matches_size_parity, dm.sign == (dm.minor.rows.size() % 2 == 0 ? 1 : -1));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
}

TEST(DeltaToMinor, SizeParityDoesNotAlwaysHold) {
  const auto dm = delta_to_minor({2, 3}, 2);
  EXPECT_EQ(dm.minor, (MinorSpec{{1}, {1}}));
  EXPECT_EQ(dm.sign, 1);
  EXPECT_FALSE(dm.matches_size_parity);
}

TEST(Extensor, DecomposableSortsWithSign) {
  const auto e = Extensor::decomposable(4, {3, 1, 2});
  ASSERT_EQ(e.terms().size(), 1u);
  EXPECT_EQ(e.terms()[0].indices, (IndexSet{1, 2, 3}));
  EXPECT_EQ(e.terms()[0].coeff, 1);
  EXPECT_EQ(Extensor::decomposable(4, {2, 1}).terms()[0].coeff, -1);
  EXPECT_TRUE(Extensor::decomposable(4, {2, 2}).is_zero());
}

TEST(Extensor, WedgeAnticommutesOnOddDegrees) {
  const auto a = Extensor::decomposable(4, {1});
  const auto b = Extensor::decomposable(4, {3});
  EXPECT_EQ(wedge(a, b).terms()[0].coeff, -wedge(b, a).terms()[0].coeff);
  EXPECT_TRUE(wedge(a, a).is_zero());
  EXPECT_EQ(top_degree_value(Extensor::decomposable(2, {4, 1})).to_string(), "-D[1,4]");
}

TEST(Cap, WorkedExample) {
  const auto first = cap(Extensor::decomposable(10, {3, 4, 5, 6}),
                         Extensor::decomposable(10, {7, 8, 9, 10, 12, 13, 16, 20}));
  ASSERT_EQ(first.degree(), 2);
  const std::vector<IndexSet> residual{{5, 6}, {4, 6}, {4, 5}, {3, 6}, {3, 5}, {3, 4}};
  const std::vector<int> signs{1, -1, 1, 1, -1, 1};
  ASSERT_EQ(first.terms().size(), residual.size());
  for (std::size_t i = 0; i < residual.size(); ++i) {
    EXPECT_EQ(first.terms()[i].indices, residual[i]);
    EXPECT_EQ(first.terms()[i].coeff, signs[i]);
  }
  EXPECT_THROW(cap(Extensor::decomposable(4, {1}), Extensor::decomposable(4, {2})), Error);
}

TEST(Cap, EvaluatesLikeDeterminantOfComplementarySizes) {
  // v_{1..a} cap v_{b..} with complementary degrees is the determinant.
  std::mt19937_64 rng(29);
  const int n = 3;
  const IntMatrix big = oracle::random_matrix(n, 2 * n, rng);
  const auto e = cap(Extensor::decomposable(n, {1, 2}), Extensor::decomposable(n, {5}));
  PlueckerExpression value(n);
  for (const auto& t : e.terms()) {
    auto factors = t.factors;
    ASSERT_TRUE(t.indices.empty());
    value.add(factors, t.coeff);
  }
  EXPECT_EQ(evaluate(value, big), plucker(big, {1, 2, 5}));
}

TEST(GrassmannCayley, RunningExampleHasSixTerms) {
  const auto pi = OrderedSetPartition::parse("2 3 6 10|5 7 8 9|1 4");
  const auto gc = gc_jellyfish(pi, 2);
  EXPECT_EQ(gc.size(), 6u);
  const auto sign = compare_up_to_sign(phi_star(gc), jellyfish_invariant(pi, 2));
  ASSERT_TRUE(sign.has_value());
  const auto j = gc.to_json();
  EXPECT_EQ(j.at("terms").size(), 6u);
}

TEST(GrassmannCayley, ProportionalForSmallPartitions) {
  for (int n = 1; n <= 5; ++n) {
    for (int r = 1; r <= 2; ++r) {
      for (int d = 1; d * r <= n; ++d) {
        for (const auto& pi : enumerate_ordered_partitions(n, d, r)) {
          ASSERT_TRUE(compare_up_to_sign(phi_star(gc_jellyfish(pi, r)), jellyfish_invariant(pi, r)).has_value())
              << pi.to_string() << " r=" << r;
        }
      }
    }
  }
  EXPECT_THROW(gc_jellyfish(OrderedSetPartition::parse("1|2 3"), 2), Error);
}

TEST(GrassmannCayley, NumericEvaluationAgreesWithPullback) {
  std::mt19937_64 rng(31);
  const auto pi = OrderedSetPartition::parse("1 3 4|2 5 6");
  const auto gc = gc_jellyfish(pi, 2);
  const IntMatrix m = oracle::random_matrix(6, 6, rng);
  EXPECT_EQ(evaluate(gc, phi(m)), evaluate(phi_star(gc), m));
}

TEST(CompareUpToSign, Cases) {
  const auto p = minor({{1, 2}, {1, 2}}, 2, 2);
  EXPECT_EQ(compare_up_to_sign(p, p), 1);
  EXPECT_EQ(compare_up_to_sign(p, -p), -1);
  EXPECT_FALSE(compare_up_to_sign(p, p.scaled(2)).has_value());
  EXPECT_EQ(compare_up_to_sign(MatrixPolynomial(2, 2), MatrixPolynomial(2, 2)), 1);
}

TEST(Determinant, MatchesLaplace) {
  std::mt19937_64 rng(37);
  for (int n = 0; n <= 6; ++n) {
    const IntMatrix m = oracle::random_matrix(n, n, rng, 9);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    EXPECT_EQ(determinant(m), oracle::laplace_det(oracle::submatrix(m, all, all)));
  }
}
