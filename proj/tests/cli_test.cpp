#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = plab::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ClassifyZ30Table) {
  const auto r = run({"classify", "--catalog", "default", "--submodule", "Z30.zero"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("WC1A"), std::string::npos);
  EXPECT_NE(r.out.find("C1A                     no   witness 2·3·5·[1]"), std::string::npos) << r.out;
  // Configuration goes to the diagnostic stream only.
  EXPECT_NE(r.err.find("randomness: none"), std::string::npos);
  EXPECT_EQ(r.out.find("randomness"), std::string::npos);
}

TEST(Cli, ClassifyJsonMatchesReportSchema) {
  const auto path = temp("plab_cli_classify.json");
  const auto r = run({"classify", "--catalog", "default", "--module", "Z9", "--all", "--format", "json", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["submodules"].size(), 2u);
  EXPECT_EQ(j["submodules"][0]["predicates"].size(), 8u);
}

TEST(Cli, RingShows) {
  auto r = run({"ring", "--spec", R"({"kind":"zn","n":12})", "--show", "jacobson"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{0, 6}"), std::string::npos) << r.out;
  r = run({"ring", "--spec", R"({"kind":"trunc_poly","p":2,"vars":3})", "--show", "u-ring"});
  EXPECT_NE(r.out.find("u-ring: no"), std::string::npos);
  r = run({"ring", "--spec", R"({"kind":"zn","n":7})", "--show", "units"});
  EXPECT_NE(r.out.find("units (6)"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--catalog", "default", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--catalog", "default", "--suite", "T99"}).code, 2);
  EXPECT_EQ(run({"verify", "--catalog", "/no/such/file.json"}).code, 2);
  EXPECT_EQ(run({"ring", "--spec", R"({"kind":"zn","n":1000})", "--show", "units"}).code, 3);
  EXPECT_EQ(run({"ring", "--spec", "{", "--show", "units"}).code, 2);
  EXPECT_EQ(run({"classify", "--catalog", "default", "--module", "Z36sq", "--all"}).code, 3);
  EXPECT_EQ(run({"classify", "--catalog", "default", "--submodule", "nope"}).code, 2);
  EXPECT_EQ(run({"mine", "--pattern", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--help"}).code, 0);
}

TEST(Cli, VerifySubsetAndJobs) {
  const auto a = temp("plab_cli_v1.json"), b = temp("plab_cli_v8.json");
  const auto r1 = run({"verify", "--catalog", "default", "--suite", "T01,T14,T27", "--report", a, "--omit-runtime"});
  const auto r8 = run({"verify", "--catalog", "default", "--suite", "T01,T14,T27", "--jobs", "8", "--report", b,
                       "--omit-runtime"});
  EXPECT_EQ(r1.code, 0) << r1.err;
  EXPECT_EQ(r8.code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(r1.out, r8.out);
}

TEST(Cli, VerifyReportsCounterexamples) {
  const auto r = run({"verify", "--catalog", "default", "--suite", "T17"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("counterexample"), std::string::npos);
}

TEST(Cli, Mine) {
  const auto r = run({"mine", "--pattern", "wc1a_not_c1a", "--max-ring", "36", "--limit", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("5 finding(s)"), std::string::npos);
}
