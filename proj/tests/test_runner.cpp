#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "possi/cli/runner.hpp"

using namespace possi::cli;

namespace {

ProblemFile problem(const std::string& name) { return load_problem(std::string(POSSI_PROBLEMS_DIR) + "/" + name); }

bool has_warning(const RunRecord& r, const std::string& text) {
  for (const auto& w : r.warnings) {
    if (w.find(text) != std::string::npos) return true;
  }
  return false;
}

std::string csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  write_csv(out, records);
  return out.str();
}

}  // namespace

TEST(Runner, SolveWithoutInteriorOptimumIsOnlyAWarning) {
  const auto records = run_solve(problem("cara_t1.json"));
  ASSERT_EQ(records.size(), 1u);
  const auto& r = records[0];
  EXPECT_EQ(r.mode, "solve");
  EXPECT_EQ(r.op, "t1");
  EXPECT_FALSE(r.beta_exact);
  EXPECT_NEAR(*r.beta_approx, 23.0 / 41.0, 1e-12);
  EXPECT_NEAR(*r.P0, 3.0, 1e-12);
  EXPECT_FALSE(r.error);
  EXPECT_TRUE(has_warning(r, "no finite optimum"));
  EXPECT_TRUE(has_warning(r, "positive rate guaranteed"));
  EXPECT_FALSE(has_errors(records));
}

TEST(Runner, SolveZeroLoading) {
  const auto r = run_solve(problem("zero_loading.json"))[0];
  EXPECT_EQ(*r.beta_exact, 1.0);
  EXPECT_EQ(*r.beta_approx, 1.0);
  EXPECT_LE(*r.residual, 1e-10);
}

TEST(Runner, SolveInteriorOptimum) {
  const auto r = run_solve(problem("cara_mix.json"))[0];
  ASSERT_TRUE(r.beta_exact);
  EXPECT_GT(*r.beta_exact, 0.0);
  EXPECT_LT(*r.beta_exact, 1.0);
  EXPECT_EQ(r.op, "mix(0.5,t1,t2)");
  EXPECT_FALSE(has_warning(r, "positive rate guaranteed"));
  const auto trap = run_solve(problem("crra_trapezoid.json"))[0];
  EXPECT_TRUE(trap.beta_exact);
  EXPECT_FALSE(trap.error);
}

TEST(Runner, SweepLambdaFlipsCaraFlagAfterTwoThirds) {
  RunOptions options;
  options.threads = 3;
  const auto records = run_sweep(problem("cara_t1.json"), SweepParam::lambda, 0, 1, 31, options);
  ASSERT_EQ(records.size(), 31u);
  EXPECT_EQ(*records[0].beta_exact, 1.0);
  EXPECT_EQ(*records[0].beta_approx, 1.0);
  for (int i = 0; i < 31; ++i) {
    EXPECT_EQ(records[i].mode, "sweep");
    EXPECT_DOUBLE_EQ(records[i].lambda, i / 30.0);
    EXPECT_EQ(has_warning(records[i], "positive rate guaranteed"), i > 20) << i;
    EXPECT_FALSE(records[i].error) << i;
  }
  EXPECT_EQ(records.back().lambda, 1.0);
}

TEST(Runner, SweepIsIndependentOfThreadCount) {
  RunOptions one;
  one.threads = 1;
  RunOptions many;
  many.threads = 7;
  const auto file = problem("cara_mix.json");
  EXPECT_EQ(csv(run_sweep(file, SweepParam::c, 0, 1, 11, one)), csv(run_sweep(file, SweepParam::c, 0, 1, 11, many)));
}

TEST(Runner, SweepCEndpointsMatchLeaves) {
  const auto file = problem("cara_mix.json");
  const auto sweep = run_sweep(file, SweepParam::c, 0, 1, 5);
  ProblemFile t1 = file;
  t1.op = parse_operator_shorthand("t1");
  ProblemFile t2 = file;
  t2.op = parse_operator_shorthand("t2");
  EXPECT_NEAR(*sweep.front().beta_exact, *run_solve(t2)[0].beta_exact, 1e-9);
  EXPECT_NEAR(*sweep.back().beta_exact, *run_solve(t1)[0].beta_exact, 1e-9);
  EXPECT_THROW(run_sweep(t1, SweepParam::c, 0, 1, 5), SchemaError);
  EXPECT_THROW(run_sweep(file, SweepParam::lambda, 0, 1, 1), SchemaError);
}

TEST(Runner, SweepRecordsFailedPoints) {
  const auto records = run_sweep(problem("zero_loading.json"), SweepParam::lambda, -1, 0, 2);
  EXPECT_TRUE(records[0].error);
  EXPECT_FALSE(records[0].beta_approx);
  EXPECT_FALSE(records[1].error);
  EXPECT_TRUE(has_errors(records));
}

TEST(Runner, CompareProducesGapRows) {
  const auto records =
      run_compare(problem("cara_t1.json"), {parse_operator_shorthand("t1"), parse_operator_shorthand("t2"),
                                            parse_operator_shorthand("mix:0.5")});
  ASSERT_EQ(records.size(), 5u);
  EXPECT_EQ(records[0].mode, "compare");
  EXPECT_EQ(records[3].mode, "gap");
  EXPECT_EQ(records[3].op, "t1|t2");
  EXPECT_NEAR(*records[3].beta_approx, 25.0 / 54.0, 1e-12);
  EXPECT_NEAR(*records[3].H_approx, 25.0 / 54.0, 1e-12);
  EXPECT_FALSE(records[3].beta_exact);
  EXPECT_EQ(records[4].op, "t1|mix(0.5,t1,t2)");
  EXPECT_FALSE(records[4].H_approx);
  EXPECT_THROW(run_compare(problem("cara_t1.json"), {parse_operator_shorthand("t1")}), SchemaError);
}

TEST(Runner, CsvIsStable) {
  const auto records = run_solve(problem("cara_t1.json"));
  const std::string text = csv(records);
  EXPECT_EQ(text.substr(0, text.find('\n')), kCsvHeader);
  EXPECT_EQ(text, csv(run_solve(problem("cara_t1.json"))));
  EXPECT_NE(text.find("solve,1,t1,,0.560975609756,"), std::string::npos) << text;
}

TEST(Runner, Formats) {
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("table"), Format::table);
  EXPECT_THROW(parse_format("xml"), SchemaError);
  EXPECT_EQ(format_number(std::nullopt), "");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");

  RunRecord r;
  r.mode = "solve";
  r.op = "mix(0.5,t1,t2)";
  r.warnings = {"a, b", "say \"hi\""};
  const std::string line = csv({r});
  EXPECT_NE(line.find("\"mix(0.5,t1,t2)\""), std::string::npos) << line;
  EXPECT_NE(line.find("\"a, b; say \"\"hi\"\"\""), std::string::npos) << line;

  std::ostringstream json_out;
  write_json(json_out, run_solve(problem("zero_loading.json")));
  const auto parsed = nlohmann::json::parse(json_out.str());
  ASSERT_TRUE(parsed.is_array());
  EXPECT_EQ(parsed[0]["beta_exact"], 1.0);
  EXPECT_EQ(parsed[0]["error"], false);
}

TEST(Runner, QuadNodesFromEnvironment) {
  ::unsetenv("POSSI_QUAD_NODES");
  EXPECT_FALSE(quad_nodes_from_env());
  ::setenv("POSSI_QUAD_NODES", "24", 1);
  EXPECT_EQ(quad_nodes_from_env(), 24);
  ::setenv("POSSI_QUAD_NODES", "1", 1);
  EXPECT_THROW(quad_nodes_from_env(), SchemaError);
  ::setenv("POSSI_QUAD_NODES", "12abc", 1);
  EXPECT_THROW(quad_nodes_from_env(), SchemaError);
  ::unsetenv("POSSI_QUAD_NODES");
}
