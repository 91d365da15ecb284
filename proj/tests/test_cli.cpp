#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "galois/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "galois");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = galois::cli::run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("galois-cli-" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string group_of(const std::string& line) { return nlohmann::json::parse(line)["group_name"]; }

}  // namespace

TEST(Cli, ClassifyExamples) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"1,3,-4,1", "C3"},          {"-2,0,0,1", "S3"},        {"1,-2,-2,-2,1", "D4"}, {"1,0,0,0,1", "V4"},
      {"-1,1,4,-3,-3,1", "C5"},    {"-1,-1,0,0,0,1", "S5"},   {"16,20,0,0,0,1", "A5"}};
  for (const auto& [coeffs, group] : cases) {
    const int degree = static_cast<int>(std::count(coeffs.begin(), coeffs.end(), ','));
    auto r = run({"classify", "--degree", std::to_string(degree), "--coeffs", coeffs});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(group_of(r.out), group) << coeffs;
  }
}

TEST(Cli, ClassifyCanonicalizesAndReportsListing) {
  auto r = run({"classify", "--degree", "3", "--coeffs", "-2,-6,8,-2", "--listing-compatible", "--exhaustive"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["key"], (std::vector<long long>{1, 3, -4, 1}));
  EXPECT_TRUE(j.contains("listing"));
  EXPECT_EQ(j["listing"]["real_roots"], 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"classify", "--degree", "3", "--coeffs", "-1,0,0,1"}).code, 1);
  EXPECT_EQ(run({"classify", "--degree", "3", "--coeffs", "1,-1,-1,1"}).code, 1);
  EXPECT_EQ(run({"classify", "--degree", "4", "--coeffs", "1,3,-4,1"}).code, 2);
  EXPECT_EQ(run({"classify", "--degree", "3", "--coeffs", "0,3,-4,1"}).code, 1);
  EXPECT_EQ(run({"classify", "--degree", "9", "--coeffs", "1,3,-4,1"}).code, 2);
  EXPECT_EQ(run({"classify", "--coeffs", "1,3,-4,1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"summarize", "--in", "/nonexistent/file.jsonl"}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
  for (const char* sub : {"classify", "generate", "summarize", "train", "evaluate", "verify"}) {
    auto r = run({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_NE(r.out.find("--"), std::string::npos) << sub;
  }
}

TEST(Cli, GenerateTrainEvaluate) {
  const auto dir = temp_dir("pipeline");
  auto g = run({"generate", "--degree", "3", "--height", "3", "--out", dir.string(), "--workers", "2"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto records = dir / "deg3_h3.jsonl";
  ASSERT_TRUE(fs::exists(records));
  ASSERT_TRUE(fs::exists(dir / "deg3_h3.summary.json"));
  auto summary = nlohmann::json::parse(g.out);
  auto s = run({"summarize", "--in", records.string()});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["groups"], summary["groups"]);

  const auto model = dir / "model.json";
  auto t = run({"train", "--in", records.string(), "--out", model.string(), "--epochs", "5"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(nlohmann::json::parse(t.out)["loss_history"].size(), 6u);

  const auto report = dir / "eval.json";
  auto e = run({"evaluate", "--in", records.string(), "--model", model.string(), "--out", report.string(), "--all"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("with rules"), std::string::npos);
  std::ifstream in(report);
  auto j = nlohmann::json::parse(in);
  EXPECT_DOUBLE_EQ(j["hybrid"]["accuracy"].get<double>(), 1.0);
}

TEST(Cli, VerifySuite) {
  const auto dir = temp_dir("verify");
  auto r = run({"verify", "--suite", "cubic-c3-h5", "--out", dir.string()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("PASS cubic-c3-h5", 0), 0u) << r.out;
}
