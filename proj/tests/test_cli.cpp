#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "chikit/cli/run.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "chi-kit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = chikit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SingleCasePasses) {
  auto r = run_cli({"shuffle", "--m", "2", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  auto j = chikit::Json::parse(r.out);
  EXPECT_EQ(j["tool"], "chi-kit");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["wall_ms"], 0.0);
  EXPECT_TRUE(j["statement_map"].contains("hopf.shuffle"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"shuffle", "--m", "-1"}).code, 2);
  EXPECT_EQ(run_cli({"nonsense"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"shuffle", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"e1", "--inject-failure"}).code, 2);
  EXPECT_EQ(run_cli({"shuffle", "--m", "9", "--max-size", "6"}).code, 2);
}

TEST(Cli, InjectedFailureExitsWithOne) {
  auto r = run_cli({"shuffle", "--max-size", "3", "--inject-failure"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("FAILURES"), std::string::npos);
}

TEST(Cli, TextFormat) {
  auto r = run_cli({"e1", "--p-max", "6", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS total.e1_page", 0), 0u);
  EXPECT_NE(r.out.find("\nPASS 1/1\n"), std::string::npos);
}

TEST(Cli, DeterministicAcrossThreadCounts) {
  auto a = run_cli({"all", "--max-size", "4", "--threads", "1"});
  auto b = run_cli({"all", "--max-size", "4", "--threads", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ConfigFileWithOverride) {
  std::string path = ::testing::TempDir() + "chikit_test.ini";
  {
    std::ofstream f(path);
    f << "p-max=4\nformat=text\n";
  }
  auto r = run_cli({"e1", "--config", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{\"p_max\":4}"), std::string::npos);
  auto o = run_cli({"e1", "--config", path, "--p-max", "5"});
  EXPECT_NE(o.out.find("{\"p_max\":5}"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, OutputAndCsvFiles) {
  std::string out = ::testing::TempDir() + "chikit_out.json", csv = ::testing::TempDir() + "chikit_pts.csv";
  auto r = run_cli({"brion", "--max-size", "3", "--output", out, "--csv", csv});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "N,B,J,I");
  std::size_t lines = 0;
  for (std::string l; std::getline(f, l);) ++lines;
  EXPECT_EQ(lines, 6u + 36u + 216u);
  EXPECT_EQ(run_cli({"brion", "--output", "/nonexistent/dir/x.json"}).code, 2);
  std::remove(out.c_str());
  std::remove(csv.c_str());
}
