#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"
#include "output.hpp"

using namespace wba::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

template <class Args, class Fn>
Outcome run(Fn fn, const Args& args, RunConfig config = {}) {
  std::ostringstream out, err;
  const int code = fn(config, args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wba_cli_test_" + name);
}

}  // namespace

TEST(RunConfig, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  c.tolerance = 0;
  EXPECT_THROW(c.validate(), UsageError);
  c.tolerance = 1e-10;
  c.size_guard = 64;
  EXPECT_NO_THROW(c.require_dimension(2, 6));
  EXPECT_THROW(c.require_dimension(2, 7), UsageError);
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::kCsv);
  EXPECT_THROW(parse_output_format("xml"), UsageError);
}

TEST(Output, NumberListAndDoubles) {
  const auto v = parse_number_list("10/27, 1/27 16/27 0 0 -0.5");
  ASSERT_EQ(v.size(), 6u);
  EXPECT_DOUBLE_EQ(v[0], 10.0 / 27);
  EXPECT_DOUBLE_EQ(v[5], -0.5);
  EXPECT_THROW(parse_number_list("1 x"), UsageError);
  EXPECT_THROW(parse_number_list("1/0"), UsageError);
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.5e-17), "-2.5e-17");
}

TEST(Output, AtomicWriteReplacesFile) {
  const auto path = temp_path("atomic.txt");
  write_file_atomically(path, "first\n");
  write_file_atomically(path, "second\n");
  std::ifstream is(path);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "second");
  for (const auto& e : std::filesystem::directory_iterator(path.parent_path())) {
    EXPECT_EQ(e.path().string().find("wba_cli_test_atomic.txt.tmp"), std::string::npos);
  }
  std::filesystem::remove(path);
  EXPECT_THROW(write_file_atomically("/nonexistent-dir/x.csv", "x"), UsageError);
}

TEST(VerifyProps, ExitCodes) {
  VerifyPropsArgs args;
  args.only = {"one-to-many"};
  args.samples = 3;
  EXPECT_EQ(run(cmd_verify_props, args).code, kExitOk);
  RunConfig strict;
  strict.tolerance = 1e-30;
  args.only = {"cycle-to-one"};
  const Outcome r = run(cmd_verify_props, args, strict);
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  args.only = {"cycle-to-many"};
  EXPECT_THROW(run(cmd_verify_props, args), UsageError);
}

TEST(VerifyProps, JsonReport) {
  VerifyPropsArgs args;
  args.only = {"identities"};
  args.samples = 2;
  args.dims = {2};
  RunConfig c;
  c.format = OutputFormat::kJson;
  const Outcome r = run(cmd_verify_props, args, c);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("all_passed").get<bool>());
  EXPECT_GT(j.at("cases").size(), 3u);
}

TEST(Projector, MixedFourSiteLabels) {
  ProjectorArgs args;
  args.emit_map = 2;
  RunConfig c;
  c.format = OutputFormat::kJson;
  const Outcome r = run(cmd_projector, args, c);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j.at("gamma").get<double>(), 1.0);
  EXPECT_EQ(j.at("terms"), 18);
  EXPECT_LT(j.at("idempotence_residual").get<double>(), 1e-10);
  EXPECT_LT(j.at("commutant_residual").get<double>(), 1e-9);
  EXPECT_LT(j.at("map").at("closed_form_deviation").get<double>(), 1e-10);
  EXPECT_GE(j.at("map").at("min_output_eigenvalue").get<double>(), -1e-8);
}

TEST(Projector, FiveSiteLabelsAndRejections) {
  ProjectorArgs args;
  args.n = 5;
  args.k = 2;
  args.mu = "[2,1]";
  args.alpha = "[1]";
  const Outcome r = run(cmd_projector, args);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("gamma 3\n"), std::string::npos);
  args.mu = "[1,1,1]";
  args.alpha = "[1,1]";
  args.n = 4;
  args.k = 1;
  const Outcome bad = run(cmd_projector, args);
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_NE(bad.err.find("not represented"), std::string::npos);
  args.mu = "[[";
  EXPECT_THROW(run(cmd_projector, args), UsageError);
}

TEST(ScanBcs, CsvIsDeterministicAndWritten) {
  ScanBcsArgs args;
  args.alpha = "0:0.3:0.05";
  args.beta = "-0.1";
  args.restarts = 16;
  const Outcome a = run(cmd_scan_bcs, args);
  RunConfig threaded;
  threaded.parallelism = 3;
  const Outcome b = run(cmd_scan_bcs, args, threaded);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "alpha,beta,analytic_positive,min_eig,product_min,class");
  EXPECT_NE(a.out.find("0.25,-0.1,1,"), std::string::npos);
  const auto line = a.out.substr(a.out.find("0.25,-0.1,1,"));
  EXPECT_EQ(line.substr(line.rfind(',', line.find('\n')) + 1, line.find('\n') - line.rfind(',', line.find('\n')) - 1),
            "WITNESS_CANDIDATE");

  const auto path = temp_path("scan.csv");
  args.out = path.string();
  ASSERT_EQ(run(cmd_scan_bcs, args).code, kExitOk);
  std::ifstream is(path);
  std::stringstream content;
  content << is.rdbuf();
  EXPECT_EQ(content.str(), a.out);
  std::filesystem::remove(path);
}

TEST(ScanBcs, BadFlags) {
  ScanBcsArgs args;
  args.d = 2;
  EXPECT_THROW(run(cmd_scan_bcs, args), UsageError);
  args.d = 3;
  args.alpha = "nope";
  EXPECT_THROW(run(cmd_scan_bcs, args), UsageError);
}

TEST(WernerPpt, MaximallyMixed) {
  WernerPptArgs args;
  args.r = "10/27 1/27 16/27 0 0 0";
  const Outcome r = run(cmd_werner_ppt, args);
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("overall").get<bool>());
  EXPECT_TRUE(j.at("valid_state").get<bool>());
  for (const auto& c : j.at("conditions")) EXPECT_TRUE(c.get<bool>());
  EXPECT_NEAR(j.at("min_eig_t1").get<double>(), 1.0 / 27, 1e-12);
}

TEST(WernerPpt, RandomBatchAndBadVector) {
  WernerPptArgs args;
  args.random = 50;
  const Outcome r = run(cmd_werner_ppt, args);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("contradictions"), 0);
  args.random = 0;
  args.r = "0.1 0.2";
  EXPECT_THROW(run(cmd_werner_ppt, args), UsageError);
  args.r = "";
  EXPECT_THROW(run(cmd_werner_ppt, args), UsageError);
}

TEST(EwMaps, SingleRowMatchesFullTable) {
  EwMapsArgs args;
  args.row = "f3";
  const Outcome one = run(cmd_ew_maps, args);
  ASSERT_EQ(one.code, kExitOk);
  args.row = "all";
  const Outcome all = run(cmd_ew_maps, args);
  ASSERT_EQ(all.code, kExitOk);
  EXPECT_NE(all.out.find(one.out), std::string::npos);
  args.row = "f4";
  EXPECT_THROW(run(cmd_ew_maps, args), UsageError);
}

TEST(Compose, TransposedSwapSquared) {
  ComposeArgs args;
  args.first = "(12)^T{2}";
  args.second = "(12)^T{2}";
  args.d = 4;
  const Outcome r = run(cmd_compose, args);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "(1 2)^T{2} * (1 2)^T{2} = d^1 (1 2)^T{2}\nloops 1\ndense_deviation 0\n");
  args.second = "(1 3)";
  args.d = 2;
  const Outcome padded = run(cmd_compose, args);
  EXPECT_EQ(padded.code, kExitOk);
  args.second = "(1 3";
  EXPECT_THROW(run(cmd_compose, args), UsageError);
}
