#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using namespace rankcertify::cli;
using Json = nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rankcertify");
  std::ostringstream out, err;
  CliRun r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(RANKCERTIFY_DATA_DIR) + "/" + name; }

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("rankcertify_cli_" + name);
  std::ofstream(p) << content;
  return p;
}

// Reports from demos start with a prose header; the JSON follows the first brace.
Json json_tail(const std::string& text) { return Json::parse(text.substr(text.find('{'))); }

}  // namespace

TEST(CliDemo, Hankel3) {
  const CliRun r = run_cli({"demo", "hankel3"});
  EXPECT_EQ(r.code, kExitStationary) << r.err;
  const Json j = json_tail(r.out);
  for (const auto& y : j["multipliers"]) EXPECT_NEAR(y.get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(j["beta"].get<double>(), 1.0, 1e-10);
}

TEST(CliDemo, Lrr4) {
  const CliRun r = run_cli({"demo", "lrr4"});
  EXPECT_EQ(r.code, kExitStationary) << r.err;
  EXPECT_EQ(json_tail(r.out)["global_min_scope"], "global");
}

TEST(CliDemo, Cone5x4Walkthrough) {
  const CliRun r = run_cli({"demo", "example21"});
  EXPECT_EQ(r.code, kExitStationary) << r.out;
  EXPECT_NE(r.out.find("R-block independence: holds"), std::string::npos);
  EXPECT_NE(r.out.find("inside T_L: holds"), std::string::npos);
}

TEST(CliDemo, UnknownNameIsInputError) {
  EXPECT_EQ(run_cli({"demo", "nope"}).code, kExitInputError);
}

TEST(CliCertify, BundledFiles) {
  EXPECT_EQ(run_cli({"certify", data("hankel3_problem.json"), data("hankel3_point.json")}).code,
            kExitStationary);
  EXPECT_EQ(run_cli({"certify", data("lrr4_problem.json"), data("lrr4_point.json")}).code,
            kExitStationary);
  const CliRun text = run_cli({"certify", data("hankel3_problem.json"), data("hankel3_point.json"),
                            "--report", "text", "--alpha", "2"});
  EXPECT_EQ(text.code, kExitStationary);
  EXPECT_NE(text.out.find("alpha"), std::string::npos);
}

TEST(CliCertify, MalformedJsonReportsLineAndColumn) {
  const fs::path bad = temp_file("bad.json", "{\n \"type\": \"hankel\",\n \"rank\": \n}");
  const CliRun r = run_cli({"certify", bad.string(), data("hankel3_point.json")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("column"), std::string::npos) << r.err;
}

TEST(CliCertify, InfeasiblePointExitCode) {
  const fs::path pt = temp_file("zero.json", R"({"rows":4,"cols":4,"data":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})");
  EXPECT_EQ(run_cli({"certify", data("lrr4_problem.json"), pt.string()}).code, kExitInfeasible);
}

TEST(CliCertify, NonStationaryPointExitCode) {
  const fs::path pt = temp_file("ones.json", R"({"rows":3,"cols":3,"data":[[1,1,1],[1,1,1],[1,1,1]]})");
  EXPECT_EQ(run_cli({"certify", data("hankel3_problem.json"), pt.string()}).code,
            kExitNotStationary);
}

TEST(CliCertify, MissingFileIsInputError) {
  EXPECT_EQ(run_cli({"certify", "/nonexistent.json", data("hankel3_point.json")}).code,
            kExitInputError);
}

TEST(CliSolve, HankelWithAlternatingProjections) {
  const CliRun r = run_cli({"solve", data("hankel3_problem.json"), "--solver", "ap"});
  EXPECT_EQ(r.code, kExitStationary) << r.out << r.err;
  EXPECT_TRUE(Json::parse(r.out)["converged"].get<bool>());
}

TEST(CliSolve, LrrWithAlmAndTrace) {
  const fs::path csv = fs::temp_directory_path() / "rankcertify_cli_trace.csv";
  const CliRun r = run_cli({"solve", data("lrr4_problem.json"), "--solver", "alm", "--seed", "3",
                         "--trace", csv.string(), "--params", data("alm_params.json")});
  EXPECT_EQ(r.code, kExitStationary) << r.out << r.err;
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "iter,objective,feas_residual,step");
}

TEST(CliSolve, RankZeroIsInputError) {
  EXPECT_EQ(run_cli({"solve", data("hankel3_problem.json"), "--rank", "0"}).code, kExitInputError);
}

TEST(CliSolve, ApRejectsNonHankelProblems) {
  EXPECT_EQ(run_cli({"solve", data("lrr4_problem.json"), "--solver", "ap"}).code, kExitInputError);
}

TEST(CliSolve, SeedEnvironmentOverridesFlag) {
  const auto solve = [](const std::string& seed) {
    return run_cli({"solve", data("lrr4_problem.json"), "--seed", seed}).out;
  };
  setenv("RANKCERTIFY_SEED", "11", 1);
  const std::string a = solve("1");
  const std::string b = solve("2");
  unsetenv("RANKCERTIFY_SEED");
  EXPECT_EQ(a, b);
  setenv("RANKCERTIFY_SEED", "twelve", 1);
  EXPECT_EQ(run_cli({"solve", data("lrr4_problem.json")}).code, kExitInputError);
  unsetenv("RANKCERTIFY_SEED");
}

TEST(CliParse, HelpAndMissingSubcommand) {
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({}).code, kExitInputError);
  EXPECT_EQ(run_cli({"certify", data("hankel3_problem.json")}).code, kExitInputError);
}
