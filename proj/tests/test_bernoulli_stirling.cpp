#include <gtest/gtest.h>

#include "degen/algebra.hpp"
#include "degen/sequences.hpp"
#include "pointwise_oracle.hpp"

namespace degen {
namespace {

using testing::lp;

TEST(BernoulliPolynomialTest, Examples) {
  EXPECT_EQ(bernoulli_polynomial(0), XLPoly(lp({1})));
  EXPECT_EQ(bernoulli_polynomial(1), XLPoly(std::vector<LambdaPoly>{lp({Rational(-1, 2), Rational(1, 2)}), lp({1})}));
  // x^2 - x + 1/6 - λ^2/6
  EXPECT_EQ(bernoulli_polynomial(2),
            XLPoly(std::vector<LambdaPoly>{lp({Rational(1, 6), 0, Rational(-1, 6)}), lp({-1}), lp({1})}));
  EXPECT_EQ(bernoulli_polynomial(3),
            XLPoly(std::vector<LambdaPoly>{lp({0, Rational(-1, 4), 0, Rational(1, 4)}),
                                           lp({Rational(1, 2), Rational(3, 2)}),
                                           lp({Rational(-3, 2), Rational(-3, 2)}), lp({1})}));
}

TEST(BernoulliPolynomialTest, ValueAtZeroIsTheNumber) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(eval_x(bernoulli_polynomial(n), Rational(0)), bernoulli_number(n));
}

TEST(Stirling2Test, Examples) {
  EXPECT_EQ(stirling2_degenerate(2, 1), lp({1, -1}));
  EXPECT_EQ(stirling2_degenerate(2, 2), lp({1}));
  EXPECT_TRUE(stirling2_degenerate(3, 4).is_zero());
  EXPECT_EQ(stirling2_degenerate(4, 2), lp({7, -18, 11}));
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(stirling2_degenerate(n, n), lp({1}));
    if (n >= 1) EXPECT_TRUE(stirling2_degenerate(n, 0).is_zero());
  }
}

TEST(Stirling2Test, MatchesBasisInversionPointwise) {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_TRUE(testing::matches_pointwise(stirling2_degenerate(n, k), n, [&](const Rational& v) {
        return testing::stirling2_row_at(n, v)[static_cast<std::size_t>(k)];
      })) << n << ',' << k;
    }
  }
}

TEST(Stirling2Test, FromEulerianExamples) {
  EXPECT_EQ(stirling2_from_eulerian(2, 1), lp({1, -1}));
  EXPECT_EQ(stirling2_from_eulerian(1, 1), lp({1}));
  EXPECT_EQ(stirling2_from_eulerian(3, 3), lp({1}));
  EXPECT_THROW(stirling2_from_eulerian(2, 3), std::invalid_argument);
}

TEST(Stirling2Test, RoutesAgreeThroughFifteen) {
  for (int n = 0; n <= 15; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(stirling2_from_eulerian(n, k), stirling2_degenerate(n, k)) << n << ',' << k;
  }
}

TEST(Stirling1Test, Examples) {
  EXPECT_EQ(stirling1_degenerate(1, 1), lp({1}));
  EXPECT_TRUE(stirling1_degenerate(1, 0).is_zero());
  EXPECT_EQ(stirling1_degenerate(2, 1), lp({-1, 1}));
  EXPECT_EQ(stirling1_degenerate(2, 2), lp({1}));
  EXPECT_EQ(stirling1_row(4)[2], lp({11, -18, 7}));
  EXPECT_THROW(stirling1_degenerate(2, 3), std::invalid_argument);
}

TEST(Stirling1Test, DiagonalAndClassicalLimit) {
  // Classical signed S_1 from s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
  std::vector<std::vector<std::int64_t>> s(11);
  s[0] = {1};
  for (std::size_t n = 1; n < s.size(); ++n) {
    s[n].assign(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
      const std::int64_t left = k >= 1 && k - 1 < s[n - 1].size() ? s[n - 1][k - 1] : 0;
      const std::int64_t down = k < s[n - 1].size() ? s[n - 1][k] : 0;
      s[n][k] = left - static_cast<std::int64_t>(n - 1) * down;
    }
  }
  for (int n = 0; n <= 10; ++n) {
    const auto row = stirling1_row(n);
    EXPECT_EQ(row[static_cast<std::size_t>(n)], lp({1}));
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(eval_lambda(row[static_cast<std::size_t>(k)], Rational(0)),
                Rational(s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
    }
  }
}

TEST(Stirling1Test, InvertsSecondKind) {
  // sum_j S_1(n,j) {j,k} = delta_{nk} for the degenerate pair.
  for (int n = 0; n <= 8; ++n) {
    const auto s1 = stirling1_row(n);
    for (int k = 0; k <= n; ++k) {
      LambdaPoly acc;
      for (int j = k; j <= n; ++j) acc += s1[static_cast<std::size_t>(j)] * stirling2_degenerate(j, k);
      EXPECT_EQ(acc, n == k ? lp({1}) : LambdaPoly{}) << n << ',' << k;
    }
  }
}

TEST(EulerianFromStirling2Test, Examples) {
  EXPECT_EQ(eulerian_from_stirling2(2, 1), lp({1, -1}));
  EXPECT_EQ(eulerian_from_stirling2(1, 1), lp({1}));
  EXPECT_EQ(eulerian_from_stirling2(3, 2), lp({4, 0, -4}));
  EXPECT_THROW(eulerian_from_stirling2(0, 1), std::invalid_argument);
  EXPECT_THROW(eulerian_from_stirling2(3, 4), std::invalid_argument);
}

TEST(EulerianFromStirling2Test, AgreesWithExplicitThroughFifteen) {
  for (int n = 1; n <= 15; ++n) {
    for (int k = 1; k <= n; ++k) EXPECT_EQ(eulerian_from_stirling2(n, k), eulerian_explicit(n, k - 1)) << n << ',' << k;
  }
}

TEST(Stirling2Test, ExpansionInBinomialBasis) {
  const XLPoly x = x_var();
  for (int n = 0; n <= 12; ++n) {
    XLPoly lhs;
    for (int k = 0; k <= n; ++k) lhs += binomial_poly(0, static_cast<unsigned>(k)) * stirling2_degenerate(n, k).scaled(factorial(k));
    EXPECT_EQ(lhs, falling_factorial_degenerate(x, static_cast<unsigned>(n))) << n;
  }
}

}  // namespace
}  // namespace degen
