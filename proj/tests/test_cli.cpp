#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "ksl/cli.hpp"

namespace fs = std::filesystem;
using ksl::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ksl_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    unsetenv("KSL_OUT");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("KSL_OUT");
  }

  Result invoke(std::vector<std::string> args, bool add_out = true) {
    if (add_out) {
      args.push_back("--out");
      args.push_back(dir_.string());
    }
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  static nlohmann::json payload(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j.erase("header");
    return j;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ConstantsJson) {
  const Result r = invoke({"constants", "--n", "2", "--q", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["results"]["constants.c_s"].get<double>(), 0.566987, 1e-6);
  EXPECT_EQ(j["header"]["version"], "0.1.0");
  std::ifstream file(dir_ / "constants.json");
  std::stringstream ss;
  ss << file.rdbuf();
  EXPECT_EQ(ss.str(), r.out);
}

TEST_F(CliTest, QGridRows) {
  const Result r = invoke({"constants", "--n", "2", "--q-grid", "1.5:3:4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_DOUBLE_EQ(j["rows"][3]["q"].get<double>(), 3.0);
  EXPECT_EQ(ksl::cli::parse_q_grid("1.5,2"), (std::vector<double>{1.5, 2}));
  EXPECT_THROW(ksl::cli::parse_q_grid("1:2"), std::invalid_argument);
}

TEST_F(CliTest, DeterministicPayload) {
  for (const char* sub : {"interval", "optimize-k", "sphere-verify"}) {
    const Result a = invoke({sub, "--seed", "11"});
    const Result b = invoke({sub, "--seed", "11"});
    ASSERT_EQ(a.code, 0) << sub << a.err;
    EXPECT_EQ(payload(a.out).dump(), payload(b.out).dump()) << sub;
  }
}

TEST_F(CliTest, AlgebraVerifyPasses) {
  const Result r = invoke({"algebra-verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"]["algebra.section2.step8.status"], "pass");
  EXPECT_EQ(j["results"]["algebra.section3.step10.status"], "pass");
  EXPECT_EQ(j["status"], "pass");
}

TEST_F(CliTest, PdeSolveMessage) {
  const Result r = invoke({"pde-solve", "--lambda", "0.4", "--q", "2", "--L", "16", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"]["pde.message"], "constant solution 0.400000");
}

TEST_F(CliTest, OptimizeFixedK) {
  const Result r = invoke({"optimize-k", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["results"]["optimize_k.lambda_threshold"].get<double>(), 10.0 / 13, 1e-12);
  EXPECT_NEAR(j["results"]["optimize_k.c_s_general"].get<double>(), 0.65, 1e-12);
}

TEST_F(CliTest, CsvFormat) {
  const Result r = invoke({"interval", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# ksl 0.1.0 interval ", 0), 0u);
  EXPECT_NE(r.out.find("\nn,q,k_lo,"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "interval.csv"));
}

TEST_F(CliTest, DomainErrorExitsOne) {
  const Result r = invoke({"constants", "--n", "2", "--q", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["results"]["constants.error"].get<std::string>() + "\n", r.err);
  EXPECT_EQ(invoke({"interval", "--n", "1"}).code, 1);
  EXPECT_EQ(invoke({"pde-solve", "--lambda", "-1"}).code, 1);
}

TEST_F(CliTest, BadFlagsExitTwo) {
  EXPECT_EQ(invoke({"constants", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"nosuch"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"constants", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"constants", "--n", "two"}).code, 2);
  EXPECT_EQ(invoke({"optimize-k", "--k", "abc"}).code, 2);
  const Result r = invoke({"constants", "--bogus"});
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(invoke({"--help"}, false).code, 0);
}

TEST_F(CliTest, ConfigFile) {
  fs::create_directories(dir_);
  const fs::path cfg = dir_ / "run.ini";
  std::ofstream(cfg) << "n = 3\nq = 1.5\n";
  const Result r = invoke({"constants", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["n"], 3);
  EXPECT_DOUBLE_EQ(j["config"]["q"].get<double>(), 1.5);
}

TEST_F(CliTest, EnvironmentOverridesOutput) {
  const fs::path env_dir = dir_ / "env";
  setenv("KSL_OUT", env_dir.c_str(), 1);
  const Result r = invoke({"interval"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(env_dir / "interval.json"));
  EXPECT_FALSE(fs::exists(dir_ / "interval.json"));
}

TEST_F(CliTest, BinaryExitCodes) {
  fs::create_directories(dir_);
  const std::string base = std::string(KSL_BINARY) + " --out " + dir_.string();
  auto status = [&](const std::string& tail) {
    const int s = std::system((base + " " + tail + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("constants"), 0);
  EXPECT_EQ(status("constants --q 9"), 1);
  EXPECT_EQ(status("constants --what"), 2);
}
