#include <gtest/gtest.h>

#include "flamingo/error.hpp"
#include "flamingo/polyring.hpp"
#include "oracles.hpp"

using namespace flamingo;

namespace {

MatrixPolynomial x(int n, int k, int i, int j) { return MatrixPolynomial::variable(n, k, i, j); }

}  // namespace

TEST(Monomial, PackingRoundTrip) {
  const auto m = Monomial::from_rows({1, 0, 3, 2});
  EXPECT_EQ(m.row(1), 1);
  EXPECT_EQ(m.row(2), 0);
  EXPECT_EQ(m.row(3), 3);
  EXPECT_EQ(m.degree(), 3);
  EXPECT_EQ(m.rows(4), (std::vector<int>{1, 0, 3, 2}));
}

TEST(MatrixPolynomial, ArithmeticCancels) {
  const auto a = x(3, 2, 1, 1) * x(3, 2, 2, 2);
  const auto b = x(3, 2, 1, 2) * x(3, 2, 2, 1);
  const auto p = a - b;
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p + (-p), MatrixPolynomial(3, 2));
  EXPECT_EQ(p.scaled(3).coefficient(Monomial::from_rows({1, 2, 0})), 3);
  EXPECT_EQ(p.coefficient(Monomial::from_rows({2, 1, 0})), -1);
  EXPECT_TRUE(p.scaled(0).is_zero());
}

TEST(MatrixPolynomial, ProductOnSharedColumnThrows) {
  try {
    (void)(x(2, 2, 1, 1) * x(2, 2, 2, 1));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kColumnCollision);
  }
}

TEST(Minor, EvaluatesToDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int size = 1 + static_cast<int>(rng() % 5);
    const IntMatrix m = oracle::random_matrix(6, 7, rng);
    std::vector<int> rows{1, 2, 3, 4, 5, 6}, cols{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    rows.resize(static_cast<std::size_t>(size));
    cols.resize(static_cast<std::size_t>(size));
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    const auto p = minor({rows, cols}, 7, 6);
    EXPECT_EQ(p.size(), static_cast<std::size_t>(oracle::factorial(size)));
    EXPECT_EQ(evaluate(p, m), oracle::laplace_det(oracle::submatrix(m, rows, cols)));
  }
  EXPECT_EQ(minor({{}, {}}, 3, 2), MatrixPolynomial::constant(3, 2, 1));
}

TEST(TermOrder, VariableSequence) {
  const int n = 3;
  // x11 > x12 > x13 > x23 > x22 > x21 > x31 > x32 > x33
  const std::vector<std::pair<int, int>> order{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 2},
                                                {2, 1}, {3, 1}, {3, 2}, {3, 3}};
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      std::vector<int> ra(n, 0), rb(n, 0);
      ra[static_cast<std::size_t>(order[a].second - 1)] = order[a].first;
      rb[static_cast<std::size_t>(order[b].second - 1)] = order[b].first;
      EXPECT_EQ(term_compare(Monomial::from_rows(ra), Monomial::from_rows(rb), n), std::strong_ordering::greater);
    }
  }
}

TEST(TermOrder, LeadingMonomialOfMinor) {
  // The leading term of a minor on rows 1,2 takes x_{1,min J} and x_{2,max J}.
  const auto p = minor({{1, 2}, {2, 4}}, 5, 2);
  const auto [m, c] = leading_monomial(p);
  EXPECT_EQ(m, Monomial::from_rows({0, 1, 0, 2, 0}));
  EXPECT_EQ(c, 1);
  EXPECT_THROW(leading_monomial(MatrixPolynomial(5, 2)), Error);
  const auto sorted = terms_by_term_order(p);
  EXPECT_EQ(sorted.front().monomial, m);
}

TEST(TermOrder, KeyAgreesWithCompare) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> ra(8), rb(8);
    for (auto& v : ra) v = static_cast<int>(rng() % 5);
    for (auto& v : rb) v = static_cast<int>(rng() % 5);
    const auto a = Monomial::from_rows(ra), b = Monomial::from_rows(rb);
    EXPECT_EQ(term_key(a, 8) <=> term_key(b, 8), term_compare(a, b, 8));
  }
}

TEST(Json, RoundTrip) {
  const auto p = minor({{1, 2, 3}, {1, 3, 4}}, 4, 3).scaled(Integer("123456789012345678901234567890"));
  const auto j = to_json(p);
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("k"), 3);
  EXPECT_EQ(j.at("terms").size(), 6u);
  EXPECT_EQ(polynomial_from_json(j), p);
  EXPECT_EQ(polynomial_from_json(nlohmann::json::parse(j.dump())), p);
  try {
    polynomial_from_json(nlohmann::json{{"n", 2}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
}

TEST(Pretty, Format) {
  EXPECT_EQ(to_pretty(minor({{1, 2}, {1, 2}}, 2, 2)), "+x(1,1)*x(2,2) -x(2,1)*x(1,2)");
  EXPECT_EQ(to_pretty(MatrixPolynomial(2, 2)), "0");
}
