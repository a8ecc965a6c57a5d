// Copyright 2026 The Inspection Game Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "inspection/cli.h"
#include "inspection/instance_io.h"
#include "oracles.h"

namespace inspection {
namespace {

namespace fs = std::filesystem;

const std::string kSampleNetwork = std::string(INSPECTION_TEST_DATA) + "/sample_network.json";

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun run;
  run.status = Dispatch(args, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("inspection_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

double SampleNetworkValue() {
  std::ifstream in(kSampleNetwork);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return oracle::FullGame(ParseInstance(buffer.str())).value;
}

TEST_F(CliTest, SolveExactMatchesOracle) {
  const CliRun run = Invoke({"solve", "--method", "cg-exact", "--epsilon", "0",
                          "--instance", kSampleNetwork});
  ASSERT_EQ(run.status, 0) << run.err;
  std::ifstream in(kSampleNetwork);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Instance network = ParseInstance(buffer.str());
  const EquilibriumResult result = ParseResult(run.out, network);
  EXPECT_NEAR(result.value, SampleNetworkValue(), 1e-9);
  EXPECT_EQ(result.method, "cg-exact");
}

TEST_F(CliTest, SolveIsDeterministic) {
  const std::vector<std::string> args = {"solve", "--method", "mwu-rg",
                                         "--epsilon", "0.5", "--instance",
                                         kSampleNetwork};
  const CliRun a = Invoke(args);
  const CliRun b = Invoke(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, MwuForwardGreedyCertificate) {
  const std::string out = (dir_ / "result.json").string();
  const std::string trace = (dir_ / "trace.csv").string();
  const CliRun run = Invoke({"solve", "--method", "mwu-fg", "--epsilon", "0.25",
                          "--instance", kSampleNetwork, "--out", out, "--trace", trace});
  ASSERT_EQ(run.status, 0) << run.err;
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::ifstream fig(kSampleNetwork);
  std::stringstream fig_text;
  fig_text << fig.rdbuf();
  const Instance network = ParseInstance(fig_text.str());
  const EquilibriumResult result = ParseResult(buffer.str(), network);
  EXPECT_EQ(result.alpha, 4.0);
  EXPECT_LE(result.certificates.attacker_best_response,
            4.0 * SampleNetworkValue() + 0.25);

  std::ifstream trace_in(trace);
  std::string header;
  std::getline(trace_in, header);
  EXPECT_EQ(header, "iteration,average_payoff,average_regret");
  int lines = 0;
  for (std::string line; std::getline(trace_in, line);) ++lines;
  EXPECT_EQ(lines, result.iterations);

  const CliRun certify = Invoke({"certify", "--instance", kSampleNetwork, "--strategy", out});
  ASSERT_EQ(certify.status, 0) << certify.err;
  EXPECT_NE(certify.out.find("\"defender_best_response_kind\": \"exact\""),
            std::string::npos);
}

TEST_F(CliTest, Project) {
  const std::string path = Write("rho.json", "[2, 1, 1]");
  const CliRun run =
      Invoke({"project", "--rho-tilde", path, "--r-a", "1", "--algo", "linear"});
  ASSERT_EQ(run.status, 0) << run.err;
  EXPECT_EQ(run.out, "[0.5,0.25,0.25]\n");
  const CliRun bad = Invoke({"project", "--rho-tilde", Write("z.json", "[1, 0]"),
                          "--r-a", "1"});
  EXPECT_EQ(bad.status, 1);
}

TEST_F(CliTest, BestResponseAndSizeLimit) {
  const std::string rho = Write("rho.json", "[0.2, 0.2, 0.2, 0.2, 0.2, 0.2, 0.2]");
  const CliRun run = Invoke({"best-response", "--instance", kSampleNetwork, "--rho", rho,
                          "--algo", "fg"});
  ASSERT_EQ(run.status, 0) << run.err;
  EXPECT_NE(run.out.find("\"v3\""), std::string::npos);
  const CliRun capped = Invoke({"best-response", "--instance", kSampleNetwork, "--rho", rho,
                             "--algo", "exact", "--exact-br-cap", "2"});
  EXPECT_EQ(capped.status, 3);
  EXPECT_NE(capped.err.find("--exact-br-cap 2"), std::string::npos);
}

TEST_F(CliTest, ExitStatuses) {
  EXPECT_EQ(Invoke({}).status, 1);
  EXPECT_EQ(Invoke({"dance"}).status, 1);
  EXPECT_EQ(Invoke({"solve", "--bogus"}).status, 1);
  EXPECT_EQ(Invoke({"--help"}).status, 0);
  EXPECT_EQ(Invoke({"solve", "--instance", kSampleNetwork, "--method", "lp"}).status, 1);
  EXPECT_EQ(Invoke({"solve", "--instance", (dir_ / "missing.json").string()})
                .status,
            1);
  const std::string bad =
      Write("bad.json", R"({"locations": ["v"], "components": ["e"],
        "monitoring": {"v": ["e"]}, "p": {"v": 0}, "r_D": 1, "r_A": 1})");
  const CliRun invalid = Invoke({"solve", "--instance", bad});
  EXPECT_EQ(invalid.status, 1);
  EXPECT_NE(invalid.err.find("detection probability must be in (0,1]"),
            std::string::npos);
  const std::string generated = (dir_ / "generated.json").string();
  ASSERT_EQ(Invoke({"generate", "--n", "12", "--m", "30", "--seed", "5",
                    "--r-d", "3", "--out", generated})
                .status,
            0);
  const CliRun stalled = Invoke({"solve", "--instance", generated, "--epsilon",
                                 "0", "--max-iter", "1"});
  EXPECT_EQ(stalled.status, 2);
  EXPECT_NE(stalled.out.find("sigma_D"), std::string::npos);
}

TEST_F(CliTest, GenerateAndSweep) {
  const std::vector<std::string> args = {"generate", "--n", "10", "--m", "25",
                                         "--seed", "3", "--r-d", "2"};
  const CliRun a = Invoke(args);
  const CliRun b = Invoke(args);
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const std::string instance = Write("gen.json", a.out);
  const CliRun sweep = Invoke({"sweep", "--instance", instance, "--method",
                            "cg-exact", "--r-d", "1,2,3"});
  ASSERT_EQ(sweep.status, 0) << sweep.err;
  std::istringstream csv(sweep.out);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "method,r_D,value_estimate,worst_case_attacker,wall_ms");
  int rows = 0;
  double previous = 1e9;
  while (std::getline(csv, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string method, r_d, value;
    std::getline(fields, method, ',');
    std::getline(fields, r_d, ',');
    std::getline(fields, value, ',');
    EXPECT_EQ(method, "cg-exact");
    EXPECT_EQ(std::stoi(r_d), rows);
    EXPECT_LE(std::stod(value), previous + 1e-9);
    previous = std::stod(value);
  }
  EXPECT_EQ(rows, 3);
}

}  // namespace
}  // namespace inspection
