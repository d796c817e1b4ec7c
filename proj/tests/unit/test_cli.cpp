#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QMEM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qmem_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string out(const std::string& sub = "out") const { return "--out " + (dir_ / sub).string(); }
  nlohmann::json report(const std::string& sub = "out") const {
    return nlohmann::json::parse(slurp(dir_ / sub / "report.json"));
  }

  fs::path dir_;
};

double row_value(const nlohmann::json& rep, const std::string& label, const char* key) {
  for (const auto& r : rep["rows"])
    if (r["label"] == label) return r[key].get<double>();
  ADD_FAILURE() << "no row " << label;
  return 0.0;
}

}  // namespace

TEST_F(Cli, CompexSucceedsWithExpectedValues) {
  ASSERT_EQ(run_cli("--scenario compex " + out()), 0);
  const auto rep = report();
  EXPECT_EQ(rep["schema"], 1);
  EXPECT_EQ(rep["scenario"], "compex");
  EXPECT_TRUE(rep.contains("timestamp"));
  EXPECT_TRUE(rep["all_satisfied"].get<bool>());
  EXPECT_NEAR(row_value(rep, "classical-max", "exact"), 0.25, 1e-12);
  EXPECT_NEAR(row_value(rep, "quantum-tetrahedron", "exact"), 0.28867513459481287, 1e-9);
}

TEST_F(Cli, AppendixVerifySucceeds) { EXPECT_EQ(run_cli("--scenario appendix-verify " + out()), 0); }

TEST_F(Cli, PaBoundForFourBits) {
  ASSERT_EQ(run_cli("--scenario pa --n 4 --s 1 --k 1 --samples 5 " + out()), 0);
  const auto rep = report();
  for (const auto& r : rep["rows"]) EXPECT_DOUBLE_EQ(r["bound"].get<double>(), 0.375);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("--scenario bogus " + out()), 2);
  EXPECT_EQ(run_cli(out()), 2);
  EXPECT_EQ(run_cli("--scenario compex --format xml " + out()), 2);
  EXPECT_EQ(run_cli("--scenario compex --n 3 " + out()), 2);
  EXPECT_EQ(run_cli("--scenario pa --family nope " + out()), 2);
  EXPECT_EQ(run_cli("--no-such-flag"), 2);
  EXPECT_EQ(run_cli("--help"), 0);
}

TEST_F(Cli, CapExceeded) { EXPECT_EQ(run_cli("--scenario classical-lower-bound --n 5 " + out()), 3); }

TEST_F(Cli, ByteIdenticalReruns) {
  ASSERT_EQ(run_cli("--scenario bound-sweep --samples 20 --seed 7 --no-timestamp " + out("a")), 0);
  ASSERT_EQ(run_cli("--scenario bound-sweep --samples 20 --seed 7 --no-timestamp " + out("b")), 0);
  const std::string a = slurp(dir_ / "a" / "report.json");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(dir_ / "b" / "report.json"));
  EXPECT_EQ(report("a").count("timestamp"), 0u);
}

TEST_F(Cli, CsvFormat) {
  ASSERT_EQ(run_cli("--scenario classical-lower-bound --n 3 --format csv " + out()), 0);
  const std::string csv = slurp(dir_ / "out" / "report.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "label,n,s,k,d,family,bound,exact,std_error,satisfied,vacuous");
  EXPECT_NE(csv.find("truncation-exact,3,1,1,2,uniform-all,0.1875,"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "out" / "report.json"));
}

TEST_F(Cli, ConfigFileWithFlagPrecedence) {
  const fs::path cfg = dir_ / "cfg.json";
  std::ofstream(cfg) << R"({"scenario": "classical-lower-bound", "n": 3, "seed": 11, "timestamp": false})";
  ASSERT_EQ(run_cli("--config " + cfg.string() + " " + out("a")), 0);
  const auto a = report("a");
  EXPECT_EQ(a["seed"], 11);
  EXPECT_EQ(a["config"]["n_max"], 3);
  EXPECT_FALSE(a.contains("timestamp"));

  ASSERT_EQ(run_cli("--config " + cfg.string() + " --n 2 --seed 12 " + out("b")), 0);
  const auto b = report("b");
  EXPECT_EQ(b["seed"], 12);
  EXPECT_EQ(b["config"]["n_max"], 2);

  std::ofstream(dir_ / "bad.json") << "{not json";
  EXPECT_EQ(run_cli("--config " + (dir_ / "bad.json").string() + " " + out("c")), 2);
}

TEST_F(Cli, MonteCarloMode) {
  ASSERT_EQ(run_cli("--scenario classical-lower-bound --n 3 --no-exact --mc-samples 4000 --no-timestamp " + out()), 0);
  const auto rep = report();
  EXPECT_FALSE(rep["config"]["exact"].get<bool>());
  bool any_error = false;
  for (const auto& r : rep["rows"])
    if (r["label"] == "truncation-exact") any_error |= r["std_error"].get<double>() > 0.0;
  EXPECT_TRUE(any_error);
}
