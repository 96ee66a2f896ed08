#include <gtest/gtest.h>

#include "degen/cli/serialize.hpp"
#include "degen/sequences.hpp"
#include "pointwise_oracle.hpp"

namespace degen::cli {
namespace {

using degen::testing::lp;
using nlohmann::json;

TEST(SerializeTest, RationalStringsAreCanonical) {
  EXPECT_EQ(to_json(Rational(2, -4)), json("-1/2"));
  EXPECT_EQ(to_json(Rational(6, 3)), json("2"));
  EXPECT_EQ(to_json(lp({Rational(1, 6), 0, Rational(-1, 6)})), (json{"1/6", "0", "-1/6"}));
  EXPECT_EQ(to_json(LambdaPoly{}), json::array());
}

TEST(SerializeTest, BernoulliGoldenDocumentShape) {
  json values = json::array();
  for (const auto& tap : bernoulli_taps(3)) values.push_back(to_json(tap));
  EXPECT_EQ(values.dump(), R"([["1"],["-1/2","1/2"],["1/6","0","-1/6"],["0","-1/4","0","1/4"]])");
}

TEST(SerializeTest, JsonRoundTrip) {
  for (int n = 0; n <= 8; ++n) {
    const XLPoly a = eulerian_poly(n, EulerianRoute::recursion);
    EXPECT_EQ(xl_poly_from_json(json::parse(to_json(a).dump())), a);
    const XLPoly b = bernoulli_polynomial(n);
    EXPECT_EQ(xl_poly_from_json(to_json(b)), b);
    const LambdaPoly c = bernoulli_number(n);
    EXPECT_EQ(lambda_poly_from_json(to_json(c)), c);
    for (int k = 0; k <= n; ++k) {
      const LambdaPoly s = stirling1_degenerate(n, k);
      EXPECT_EQ(lambda_poly_from_json(to_json(s)), s);
    }
  }
}

TEST(SerializeTest, CsvRoundTrip) {
  for (int n = 0; n <= 8; ++n) {
    const LambdaPoly c = bernoulli_number(n);
    EXPECT_EQ(lambda_poly_from_csv_cell(to_csv_cell(c)), c);
  }
  EXPECT_EQ(to_csv_cell(lp({Rational(1, 6), 0, Rational(-1, 6)})), "1/6;0;-1/6");
  EXPECT_EQ(to_csv_cell(XLPoly(std::vector<LambdaPoly>{lp({1, -1}), lp({1, 1})})), "1;-1|1;1");
  EXPECT_TRUE(lambda_poly_from_csv_cell("").is_zero());
}

TEST(SerializeTest, RejectsMalformed) {
  EXPECT_THROW(rational_from_json(json(0.5)), std::invalid_argument);
  EXPECT_THROW(rational_from_json(json("0.5")), std::invalid_argument);
  EXPECT_THROW(rational_from_json(json("2/-4")), std::invalid_argument);
  EXPECT_THROW(lambda_poly_from_json(json("1")), std::invalid_argument);
  EXPECT_THROW(xl_poly_from_json(json{"1"}), std::invalid_argument);
}

TEST(SerializeTest, ReportRoundTrip) {
  CheckSpec pass{"a", "x = y", Ranges{4, std::nullopt, std::nullopt}, CheckStatus::pass, std::nullopt};
  CheckSpec fail{"b", "u = v", Ranges{3, 5, 2}, CheckStatus::fail,
                 Counterexample{{{"n", 2}, {"k", 1}}, "1 + λ", "1 - λ"}};
  const json report = report_to_json({pass, fail}, CompareMode::exact);
  EXPECT_EQ(report["summary"]["total"], 2);
  EXPECT_EQ(report["summary"]["passed"], 1);
  EXPECT_EQ(report["summary"]["failed"], 1);
  EXPECT_EQ(report["exhaustive"], true);
  EXPECT_TRUE(report["checks"][0]["counterexample"].is_null());
  EXPECT_EQ(check_from_json(report["checks"][0]), pass);
  EXPECT_EQ(check_from_json(json::parse(report["checks"][1].dump())), fail);
  EXPECT_EQ(report_to_json({}, CompareMode::smoke)["exhaustive"], false);
}

TEST(SerializeTest, CsvEscape) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
}

}  // namespace
}  // namespace degen::cli
