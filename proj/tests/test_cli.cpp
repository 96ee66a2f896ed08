#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "degen/cli/commands.hpp"
#include "degen/cli/serialize.hpp"

namespace degen::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(const std::vector<std::string>& args) {
  const auto r = invoke(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return json::parse(r.out);
}

TEST(CliTableTest, BernoulliSymbolic) {
  const json doc = invoke_json({"table", "bernoulli", "--n-max", "3", "--lambda", "symbolic", "--format", "json"});
  EXPECT_EQ(doc["family"], "bernoulli");
  EXPECT_EQ(doc["values"].dump(), R"([["1"],["-1/2","1/2"],["1/6","0","-1/6"],["0","-1/4","0","1/4"]])");
  EXPECT_EQ(doc["metadata"]["route"], "triangular");
  EXPECT_EQ(doc["metadata"]["tool"], "degen");
  EXPECT_FALSE(doc["metadata"].contains("generated_at"));
}

TEST(CliTableTest, EulerianAtLambdaZero) {
  const json one = invoke_json({"table", "eulerian-number", "--n-max", "1", "--lambda", "0"});
  EXPECT_EQ(one["values"].dump(), R"([["1"],["1","0"]])");
  const json three = invoke_json({"table", "eulerian-number", "--n-max", "3", "--lambda", "0"});
  EXPECT_EQ(three["values"][3].dump(), R"(["1","4","1","0"])");
  EXPECT_EQ(three["parameters"]["lambda"], "0");
}

TEST(CliTableTest, RoutesProduceSameValues) {
  const json a = invoke_json({"table", "eulerian-poly", "--n-max", "6", "--route", "explicit"});
  const json b = invoke_json({"table", "eulerian-poly", "--n-max", "6", "--route", "gf-recursion"});
  const json c = invoke_json({"table", "eulerian-poly", "--n-max", "6", "--route", "recursion"});
  EXPECT_EQ(a["values"], b["values"]);
  EXPECT_EQ(a["values"], c["values"]);
  const json s = invoke_json({"table", "stirling2", "--n-max", "6"});
  const json t = invoke_json({"table", "stirling2", "--n-max", "6", "--route", "eulerian"});
  EXPECT_EQ(s["values"], t["values"]);
}

TEST(CliTableTest, CsvHeaderAndRows) {
  const auto r = invoke({"table", "stirling1", "--n-max", "2", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, kDocumentCsvHeader);
  EXPECT_NE(r.out.find("stirling1,2,1,,,basis-solve,symbolic,-1;1\n"), std::string::npos) << r.out;
}

TEST(CliTableTest, HumanRendering) {
  const auto r = invoke({"table", "eulerian-number", "--n-max", "3", "--human"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("eulerian-number n=3 k=0: 1 - 3λ + 2λ^2"), std::string::npos) << r.out;
}

TEST(CliTableTest, TimestampIsOptIn) {
  const json doc = invoke_json({"table", "bernoulli", "--n-max", "1", "--timestamp"});
  EXPECT_TRUE(doc["metadata"].contains("generated_at"));
}

TEST(CliTableTest, ByteDeterministic) {
  const std::vector<std::string> args{"table", "eulerian-poly", "--n-max", "7"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(CliEvalTest, PowerSumExamples) {
  EXPECT_EQ(invoke_json({"eval", "powersum", "--m", "2", "--n", "2", "--lambda", "0"})["values"], "5");
  EXPECT_EQ(invoke_json({"eval", "powersum", "--m", "2", "--n", "2", "--lambda", "1"})["values"], "2");
  EXPECT_EQ(invoke_json({"eval", "powersum", "--m", "2", "--n", "2"})["values"].dump(), R"(["5","-3"])");
  for (const char* route : {"direct", "eulerian", "bernoulli"}) {
    EXPECT_EQ(invoke_json({"eval", "powersum", "--m", "5", "--n", "4", "--route", route})["values"].dump(),
              R"(["979","-1350","605","-90"])");
  }
}

TEST(CliEvalTest, EulerianAtMinusOne) {
  EXPECT_EQ(invoke_json({"eval", "eulerian-at", "--x", "-1", "--n", "2", "--lambda", "1/3"})["values"], "-2/3");
  EXPECT_EQ(invoke_json({"eval", "eulerian-at", "--x=-1", "--n", "2", "--lambda", "1/3", "--route", "bernoulli"})
                ["values"],
            "-2/3");
  EXPECT_EQ(invoke_json({"eval", "eulerian-at", "--x", "1", "--n", "4", "--lambda=-3/2"})["values"], "24");
  // 5 - 3λ at λ = -3/2
  EXPECT_EQ(invoke_json({"eval", "powersum", "--m", "2", "--n", "2", "--lambda", "-3/2"})["values"], "19/2");
}

TEST(CliEvalTest, RejectsFloats) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"eval", "powersum", "--m", "2", "--n", "2", "--lambda", "0.5"},
           {"eval", "eulerian-at", "--x", "1.0", "--n", "2"},
           {"table", "bernoulli", "--n-max", "2", "--lambda", "1e-3"}}) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("p/q"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(CliEvalTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"table", "nope", "--n-max", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table", "bernoulli"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table", "bernoulli", "--n-max", "2", "--route", "explicit"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "powersum", "--m", "0", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "eulerian-at", "--x", "2", "--n", "2", "--route", "bernoulli"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--suite", "some"}).code, kExitUsage);
}

TEST(CliEvalTest, NCapEnvironment) {
  EXPECT_EQ(invoke({"table", "bernoulli", "--n-max", "65"}).code, kExitUsage);
  ::setenv(kNCapEnvVar, "4", 1);
  EXPECT_EQ(invoke({"table", "bernoulli", "--n-max", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table", "bernoulli", "--n-max", "4"}).code, kExitOk);
  ::unsetenv(kNCapEnvVar);
}

TEST(CliVerifyTest, WorpitzkyAtEight) {
  const auto r = invoke({"verify", "--check", "thm-2.7-worpitzky", "--n-max", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(r.out);
  ASSERT_EQ(report["checks"].size(), 1u);
  EXPECT_EQ(report["checks"][0]["status"], "pass");
  EXPECT_EQ(report["checks"][0]["range"]["n_max"], 8);
  EXPECT_EQ(report["mode"], "exact");
}

TEST(CliVerifyTest, UnknownIdListsValid) {
  const auto r = invoke({"verify", "--check", "no-such-id"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("thm-2.7-worpitzky"), std::string::npos);
  EXPECT_NE(r.err.find("no-such-id"), std::string::npos);
}

TEST(CliVerifyTest, FormatsAndList) {
  const auto list = invoke({"verify", "--list"});
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_NE(list.out.find("prop-2.1-gf-residual\n"), std::string::npos);

  const auto csv = invoke({"verify", "--check", "thm-2.2-vanishing", "--n-max", "4", "--format", "csv"});
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out, std::string(kReportCsvHeader) + "\nthm-2.2-vanishing,pass,4,,,,,\n");

  const auto text = invoke({"verify", "--check", "thm-2.2-vanishing", "--n-max", "4", "--format", "text", "--smoke"});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("non-exhaustive"), std::string::npos);
  EXPECT_NE(text.out.find("PASS thm-2.2-vanishing"), std::string::npos);
}

TEST(CliVerifyTest, JobsDoNotChangeBytes) {
  const std::vector<std::string> base{"verify", "--check", "thm-2.6-recursion", "--check", "thm-2.2-vanishing",
                                      "--check", "eulerian-structure", "--n-max", "8"};
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
  EXPECT_EQ(invoke(base).out, invoke(with_jobs).out);
}

}  // namespace
}  // namespace degen::cli
