#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "copgeo_cli/cli.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = copgeo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COPGEO_TEST_DATA_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("copgeo_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(Cli, MeasurePermutationModes) {
  auto r = run({"measure-perm", "1,3,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["method"], "exact-mcd");
  EXPECT_EQ(j["omega"], "1/9");
  EXPECT_EQ(j["tau"], "5/9");
  EXPECT_EQ(j["rho"], "5/9");

  r = run({"measure-perm", "1,3,2", "--fixed-point"});
  j = json::parse(r.out);
  EXPECT_EQ(j["method"], "fixed-point");
  EXPECT_EQ(j["omega"], "1/6");
  EXPECT_EQ(j["tau"], "1/3");

  r = run({"measure-perm", "3,1,4,2", "--iterate", "2"});
  j = json::parse(r.out);
  EXPECT_EQ(j["omega"], "15/64");
  EXPECT_EQ(j["tau"], "1/16");
  EXPECT_TRUE(j["rho"].is_null());
  EXPECT_TRUE(j["exact"]["tau"].get<bool>());
  EXPECT_TRUE(j["exact"]["ell"].get<bool>());
  EXPECT_FALSE(j["exact"]["rho"].get<bool>());

  EXPECT_EQ(run({"measure-perm", "1,3,2", "--fixed-point", "--iterate", "2"}).code, 2);
}

TEST(Cli, MeasureShuffleAndGrid) {
  auto r = run({"measure-shuffle", data("reversal.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["tau"], "-1");
  EXPECT_NEAR(j["surf"].get<double>(), (1 + std::sqrt(3.0)) / 2, 1e-15);

  TempDir dir;
  const auto profile = (dir.path() / "profile.csv").string();
  r = run({"measure-grid", data("uniform4.json"), "--profile", profile});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["method"], "numeric-grid");
  EXPECT_NEAR(j["tau_value"].get<double>(), 0, 1e-12);
  EXPECT_NEAR(j["rho_value"].get<double>(), 0, 1e-12);
  std::ifstream in(profile);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,L");

  r = run({"measure-grid", data("anti3.csv"), "--K", "256"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["tau_value"].get<double>(), -2.0 / 3, 1e-12);
}

TEST(Cli, IfsTableAndRenders) {
  TempDir dir;
  auto r = run({"ifs", "3,1,4,2", "--n", "2", "--render", dir.path().string(), "--format", "pgm", "--size", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "n,omega,tau,ell,surf,d_inf");
  EXPECT_EQ(rows[1].substr(0, 8), "0,0,1,1,");
  EXPECT_EQ(rows[2].substr(0, 11), "1,3/16,1/4,");
  EXPECT_EQ(rows[3].substr(0, 12), "2,15/64,1/16");
  EXPECT_EQ(rows[3].substr(rows[3].rfind(',') + 1), "0.015625");
  EXPECT_TRUE(fs::exists(dir.path() / "ifs_n1.pgm"));
  EXPECT_TRUE(fs::exists(dir.path() / "ifs_n2.pgm"));
  EXPECT_FALSE(fs::exists(dir.path() / "ifs_n3.pgm"));
}

TEST(Cli, VtFixedPoint) {
  auto r = run({"vt-fixed-point", data("t_132.json"), "--resolution", "27"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["converged"].get<bool>());
  EXPECT_EQ(j["resolution"], 27);
  EXPECT_NEAR(j["tau_value"].get<double>(), 1.0 / 3, 0.05);

  r = run({"vt-fixed-point", data("t_general.json"), "--resolution", "32", "--max-iter", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(json::parse(r.out)["converged"].get<bool>());
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, Empirical) {
  auto r = run({"empirical", data("three_points.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["tau"], "1/3");
  r = run({"empirical", data("tied.csv")});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  r = run({"empirical", data("tied.csv"), "--tie-policy", "input-order"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["tau"], "1");
  EXPECT_EQ(run({"empirical", data("bad_cell.csv")}).code, 2);
}

TEST(Cli, MonteCarlo) {
  auto r = run({"mc", "tau", "1,3,2", "--samples", "20000", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["method"], "monte-carlo");
  EXPECT_EQ(j["exact"], "5/9");
  EXPECT_LT(std::abs(j["estimate"].get<double>() - 5.0 / 9), 5 * j["std_error"].get<double>());
  EXPECT_EQ(r.out, run({"--threads", "1", "mc", "tau", "1,3,2", "--samples", "20000", "--seed", "7"}).out);

  r = run({"mc", "omega", data("reversal.json"), "--samples", "10000", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["exact"], "1/2");
  EXPECT_EQ(run({"mc", "omega", "identity", "--seed", "1", "--samples", "100"}).code, 4);
  EXPECT_EQ(run({"mc", "omega", "identity"}).code, 2);
}

TEST(Cli, Render) {
  TempDir dir;
  const auto file = (dir.path() / "w.svg").string();
  auto r = run({"render", data("shuffle_132.json"), "--out", file});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(file);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto direct = run({"render", "1,3,2"});
  EXPECT_EQ(written, direct.out);
  EXPECT_NE(written.find("<svg"), std::string::npos);
  EXPECT_EQ(run({"render", "1,3,2", "--format", "gif"}).code, 2);
  EXPECT_EQ(run({"render", "1,3,2", "--size", "8"}).code, 4);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"measure-perm", "1,1"}).code, 2);
  EXPECT_EQ(run({"measure-perm", "1,x"}).code, 2);
  EXPECT_EQ(run({"measure-shuffle", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"measure-grid", data("three_points.csv")}).code, 2);
  EXPECT_EQ(run({"measure-grid", data("uniform4.json"), "--K", "8"}).code, 4);
  EXPECT_EQ(run({"measure-grid", data("uniform4.json"), "--K", "100000"}).code, 3);
  EXPECT_EQ(run({"ifs", "2,3,4,5,6,7,8,9,10,1", "--n", "9"}).code, 3);
}

}  // namespace
