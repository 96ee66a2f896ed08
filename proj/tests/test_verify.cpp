#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "degen/format.hpp"
#include "degen/sequences.hpp"
#include "degen/verify.hpp"

namespace degen {
namespace {

const CheckDef& find_check(const std::string& id) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckDef& c) { return c.id == id; });
  if (it == reg.end()) throw std::runtime_error("missing check " + id);
  return *it;
}

TEST(RegistryTest, IdsUniqueAndCoverTheIdentityList) {
  const auto ids = check_ids();
  EXPECT_GE(ids.size(), 16u);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  for (const char* id : {"prop-2.1-gf-residual", "thm-2.2-explicit", "thm-2.2-vanishing", "thm-2.3-poly-recursion",
                         "thm-2.4-minus-one", "cor-2.5-alternating-sum", "thm-2.6-recursion", "thm-2.7-worpitzky",
                         "thm-2.8-stirling2-from-eulerian", "thm-2.9-power-sum-eulerian",
                         "eq-43-power-sum-bernoulli", "thm-2.10-eulerian-bernoulli",
                         "thm-2.11-eulerian-from-stirling2", "eq-19-coefficients", "eq-38-stirling2-expansion",
                         "bernoulli-lambda1-vanishing", "oracle-lambda0-permutations"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  for (const auto& c : registry()) EXPECT_FALSE(c.anchor.empty()) << c.id;
}

TEST(RunSuiteTest, VanishingPassesAtTen) {
  SuiteOptions opts;
  opts.selection = {"thm-2.2-vanishing"};
  opts.overrides.n_max = 10;
  const auto results = run_suite(opts);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].status, CheckStatus::pass);
  EXPECT_FALSE(results[0].counterexample.has_value());
  EXPECT_EQ(results[0].range.n_max, 10);
}

TEST(RunSuiteTest, WorpitzkyAtEight) {
  SuiteOptions opts;
  opts.selection = {"thm-2.7-worpitzky"};
  opts.overrides.n_max = 8;
  EXPECT_TRUE(all_passed(run_suite(opts)));
}

TEST(RunSuiteTest, UnknownIdListsValidIds) {
  SuiteOptions opts;
  opts.selection = {"no-such-id"};
  try {
    run_suite(opts);
    FAIL() << "expected UnknownCheckError";
  } catch (const UnknownCheckError& e) {
    EXPECT_EQ(e.id(), "no-such-id");
    EXPECT_EQ(e.valid_ids(), check_ids());
  }
}

TEST(RunSuiteTest, OrderAndJobsIndependent) {
  SuiteOptions a;
  a.selection = {"thm-2.6-recursion", "thm-2.2-vanishing", "eulerian-structure"};
  a.overrides.n_max = 8;
  SuiteOptions b = a;
  b.selection = {"eulerian-structure", "thm-2.6-recursion", "thm-2.2-vanishing"};
  b.jobs = 3;
  const auto ra = run_suite(a);
  const auto rb = run_suite(b);
  EXPECT_EQ(ra, rb);
  // registry order
  const auto ids = check_ids();
  auto pos = [&](const std::string& id) { return std::find(ids.begin(), ids.end(), id) - ids.begin(); };
  for (std::size_t i = 1; i < ra.size(); ++i) EXPECT_LT(pos(ra[i - 1].id), pos(ra[i].id));
}

TEST(RunSuiteTest, SmallRangeSuiteAllPassBothModes) {
  for (auto mode : {CompareMode::exact, CompareMode::smoke}) {
    SuiteOptions opts;
    opts.overrides = Ranges{6, 6, 6};
    opts.mode = mode;
    opts.jobs = 4;
    const auto results = run_suite(opts);
    EXPECT_EQ(results.size(), registry().size());
    for (const auto& r : results) {
      EXPECT_EQ(r.status, CheckStatus::pass) << r.id;
      EXPECT_FALSE(r.counterexample.has_value()) << r.id;
    }
  }
}

TEST(EffectiveRangesTest, OverridesOnlyUsedDimensionsAndClamps) {
  const auto& perms = find_check("oracle-lambda0-permutations");
  EXPECT_EQ(effective_ranges(perms, Ranges{50, 3, 3}), (Ranges{9, std::nullopt, std::nullopt}));
  const auto& ps = find_check("thm-2.9-power-sum-eulerian");
  EXPECT_EQ(effective_ranges(ps, Ranges{std::nullopt, 5, 7}), (Ranges{10, 5, std::nullopt}));
}

TEST(PerturbedCheckTest, FailsAtSmallestNK) {
  // Mutate one coefficient of A(3,1) and one of A(5,0); the scan must stop at (3,1).
  auto perturbed = [](int n, int k) {
    LambdaPoly v = eulerian_explicit(n, k);
    if ((n == 3 && k == 1) || (n == 5 && k == 0)) v += LambdaPoly(Rational(1, 2));
    return v;
  };
  CheckDef def{"self-test", "A(n,k) two ways", Ranges{6, std::nullopt, std::nullopt}, std::nullopt,
               [&](const Ranges& r, const Comparator& cmp) {
                 return scan_nk(0, *r.n_max, [](int) { return 0; }, [](int n) { return n; }, perturbed,
                                eulerian_recursive, cmp);
               }};
  for (auto mode : {CompareMode::exact, CompareMode::smoke}) {
    const CheckSpec spec = run_check(def, {}, mode);
    EXPECT_EQ(spec.status, CheckStatus::fail);
    ASSERT_TRUE(spec.counterexample.has_value());
    EXPECT_EQ(spec.counterexample->parameters,
              (std::vector<std::pair<std::string, std::int64_t>>{{"n", 3}, {"k", 1}}));
    EXPECT_EQ(spec.counterexample->lhs, to_text(perturbed(3, 1)));
    EXPECT_EQ(spec.counterexample->rhs, to_text(eulerian_recursive(3, 1)));
  }
}

TEST(ComparatorTest, SmokeIsSamplingOnly) {
  // (λ+3/2)(λ+1/3)(λ-1/5)(λ-2/3)(λ-7/2) vanishes at every sample point.
  LambdaPoly p(Rational(1));
  for (Rational root : {Rational(-3, 2), Rational(-1, 3), Rational(1, 5), Rational(2, 3), Rational(7, 2)}) {
    p *= LambdaPoly(std::vector<Rational>{-root, Rational(1)});
  }
  EXPECT_TRUE(Comparator(CompareMode::smoke).equal(p, LambdaPoly{}));
  EXPECT_FALSE(Comparator(CompareMode::exact).equal(p, LambdaPoly{}));
}

TEST(StatusTest, Names) {
  EXPECT_EQ(to_string(CheckStatus::pass), "pass");
  EXPECT_EQ(to_string(CheckStatus::fail), "fail");
  EXPECT_EQ(to_string(CompareMode::smoke), "smoke");
}

}  // namespace
}  // namespace degen
