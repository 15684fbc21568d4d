#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "wilson/cli.hpp"
#include "wilson/report.hpp"

using namespace wilson;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("wilson_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

}  // namespace

TEST(Cli, CheckJson) {
  const auto r = run_cli({"check", "8", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto j = report::Json::parse(r.out);
  EXPECT_FALSE(j["holds"].get<bool>());
  ASSERT_EQ(j["mismatches"].size(), 2u);
  EXPECT_EQ(j["mismatches"][0]["k"], 2);
  EXPECT_EQ(j["mismatches"][1]["k"], 4);
  EXPECT_EQ(report::claim_report_from_json(j), check_unit_claim(8));
}

TEST(Cli, GlobalFlagsMayPrecedeSubcommand) {
  const auto a = run_cli({"--format", "json", "check", "8"});
  const auto b = run_cli({"check", "8", "--format", "json"});
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Phi) {
  const auto r = run_cli({"phi", "12"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "4\n");
  EXPECT_EQ(run_cli({"phi", "12", "--format", "csv"}).out, "n,phi\n12,4\n");
  EXPECT_EQ(run_cli({"lambda", "12", "--format", "json"}).out,
            "{\n  \"n\": 12,\n  \"lambda\": 2\n}\n");
}

TEST(Cli, MissingArgumentIsUsageError) {
  const auto r = run_cli({"check"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_EQ(r.err.rfind("error:", 0), 0u);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, OtherUsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"phi", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"phi", "-3"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"phi", "12", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"scan", "2", "10"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"scan", "10", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"scan", "3", "10", "--mode", "half"}).code, cli::kExitUsage);
}

TEST(Cli, ComputationErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"wilson", "15"},
           {"subgroup", "8", "4"},
           {"check", "20000000"},
           {"scan", "3", "30000"},
       }) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.code, cli::kExitComputation) << args[0];
    EXPECT_EQ(r.err.rfind("error:", 0), 0u) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("scan"), std::string::npos);
}

TEST(Cli, TextOutputs) {
  EXPECT_EQ(run_cli({"factor", "360"}).out, "360 = 2^3 * 3^2 * 5\n");
  EXPECT_EQ(run_cli({"units", "8"}).out, "U(Z/8Z): phi = 4, lambda = 2, cyclic = no\n1 3 5 7\n");
  EXPECT_EQ(run_cli({"wilson", "13"}).out, "(13 - 1)! = -1 mod 13: holds\n");
  EXPECT_EQ(run_cli({"subgroup", "8", "3"}).out,
            "<3> mod 8: order 2, elements {1, 3}\nproduct = 3, predicted = 7: fails\n");
  EXPECT_EQ(run_cli({"symfun", "8", "--exact"}).out,
            "s_1 = 0  (exact 16)\ns_2 = 6  (exact 86)\ns_3 = 0  (exact 176)\ns_4 = 1  (exact 105)\n");
  EXPECT_EQ(run_cli({"scan", "3", "8"}).out,
            "scan [3, 8] mode full\ntotal 6, holding 5, failing 1\nfailing (n:k): 8:2\n"
            "gauss violations: none\n");
}

TEST(Cli, CsvOutputs) {
  EXPECT_EQ(run_cli({"check", "5", "--format", "csv"}).out,
            "n,phi,k,s_k,predicted,match\n5,4,1,0,0,true\n5,4,2,0,0,true\n5,4,3,0,0,true\n"
            "5,4,4,4,4,true\n");
  EXPECT_EQ(run_cli({"factor", "12", "--format", "csv"}).out, "prime,exponent\n2,2\n3,1\n");
  EXPECT_EQ(run_cli({"scan", "3", "5", "--mode", "product", "--format", "csv"}).out,
            "n,phi,product,predicted,gauss_expected,match\n3,2,2,2,2,true\n4,2,3,3,3,true\n"
            "5,4,4,4,4,true\n");
}

TEST(Cli, FullScanCsvHasOneRowPerUnitDegree) {
  const auto r = run_cli({"scan", "3", "300", "--mode", "full", "--format", "csv"});
  ASSERT_EQ(r.code, cli::kExitOk);
  u64 expected_rows = 1;
  for (u64 n = 3; n <= 300; ++n) expected_rows += oracle::units(n).size();
  EXPECT_EQ(static_cast<u64>(std::count(r.out.begin(), r.out.end(), '\n')), expected_rows);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,phi,k,s_k,predicted,match");
}

TEST_F(TempDir, OutFileAndDeterminismAcrossJobs) {
  const auto a = dir_ / "a.csv", b = dir_ / "b.csv", c = dir_ / "c.json", d = dir_ / "d.json";
  ASSERT_EQ(run_cli({"scan", "3", "700", "--format", "csv", "--out", a.string()}).code, 0);
  ASSERT_EQ(run_cli({"scan", "3", "700", "--format", "csv", "--jobs", "4", "--out", b.string()})
                .code,
            0);
  ASSERT_EQ(run_cli({"scan", "3", "5000", "--mode", "product", "--format", "json", "--out",
                     c.string()})
                .code,
            0);
  ASSERT_EQ(run_cli({"scan", "3", "5000", "--mode", "product", "--format", "json", "--jobs", "3",
                     "--out", d.string()})
                .code,
            0);
  EXPECT_FALSE(read_file(a).empty());
  EXPECT_EQ(read_file(a), read_file(b));
  EXPECT_EQ(read_file(c), read_file(d));
}

TEST_F(TempDir, UnwritableOutIsComputationError) {
  const auto r = run_cli({"phi", "12", "--out", (dir_ / "missing" / "x.txt").string()});
  EXPECT_EQ(r.code, cli::kExitComputation);
  EXPECT_EQ(r.err.rfind("error:", 0), 0u);
}
