// Copyright 2026 The OMD Authors
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

#include "omd/harness.h"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "json.hpp"
#include "omd/io.h"

namespace omd {
namespace {

namespace fs = std::filesystem;

const std::string kData = OMD_TEST_DATA;

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "omd_harness_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string WriteScratch(const std::string& name, const std::string& body) {
  const fs::path p = Scratch(name);
  std::ofstream(p) << body;
  return p.string();
}

int RunCli(const std::string& args) {
  const std::string cmd =
      std::string(OMD_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(FitRateTest, PowerLaws) {
  const Vec t = {10, 20, 40, 80, 160, 320};
  Vec inv, root;
  for (double x : t) {
    inv.push_back(3.0 / x);
    root.push_back(0.7 / std::sqrt(x));
  }
  EXPECT_NEAR(FitRate(t, inv), -1.0, 1e-12);
  EXPECT_NEAR(FitRate(t, root), -0.5, 1e-12);
}

TEST(FitRateTest, NoisyInverse) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> noise(-0.1, 0.1);
  Vec t, v;
  for (double x = 10; x <= 10240; x *= 2) {
    t.push_back(x);
    v.push_back((1.0 + noise(rng)) / x);
  }
  const double slope = FitRate(t, v);
  EXPECT_GE(slope, -1.2);
  EXPECT_LE(slope, -0.8);
  EXPECT_THROW(FitRate(Vec{1, 2}, Vec{1, 2}), InvalidInput);
}

TEST(RunExperimentTest, ZeroMatrixGame) {
  ExperimentConfig c;
  c.kind = "game";
  c.matrix_path = WriteScratch("zero.csv", "0,0,0\n0,0,0\n");
  c.rounds = 50;
  const ExperimentOutcome o = RunExperiment(c);
  EXPECT_EQ(o.summary.final_value, 0.0);
  EXPECT_EQ(o.summary.certificate_checks, 50);
  EXPECT_EQ(o.summary.certificate_failures, 0);
  EXPECT_EQ(o.trace.rows.size(), 50u);
  EXPECT_EQ(o.trace.columns.front(), "t");
}

TEST(RunExperimentTest, MatchingPenniesWithinBound) {
  ExperimentConfig c;
  c.kind = "game";
  c.matrix_path = kData + "/matching_pennies.csv";
  c.rounds = 200;
  const ExperimentOutcome o = RunExperiment(c);
  EXPECT_LE(o.summary.final_value, o.summary.bound);
  EXPECT_EQ(o.summary.ExitStatus(), 0);
}

TEST(RunExperimentTest, MaxFlowTwoParallel) {
  ExperimentConfig c;
  c.kind = "maxflow";
  c.graph_path = kData + "/two_parallel.graph";
  c.epsilon = 0.1;
  const ExperimentOutcome o = RunExperiment(c);
  ASSERT_TRUE(o.flow.has_value());
  EXPECT_GE(o.flow->value, 1.8);
  EXPECT_EQ(o.summary.ExitStatus(), 0);
  const std::string csv = FlowCsv(*o.network, *o.flow);
  EXPECT_EQ(csv.rfind("edge_index,u,v,flow\n", 0), 0u);
}

TEST(RunExperimentTest, ConfigErrors) {
  ExperimentConfig c;
  c.kind = "game";
  EXPECT_THROW(RunExperiment(c), ConfigError);
  c.kind = "nope";
  EXPECT_THROW(RunExperiment(c), ConfigError);
  c.kind = "maxflow";
  c.graph_path = kData + "/two_parallel.graph";
  c.epsilon = 1.5;
  EXPECT_THROW(RunExperiment(c), ConfigError);
  c.kind = "game";
  c.matrix_path = WriteScratch("bad.csv", "1,0\n0,2\n");
  EXPECT_THROW(RunExperiment(c), ParseError);
}

TEST(CliTest, ExitCodes) {
  const std::string pennies = kData + "/matching_pennies.csv";
  EXPECT_EQ(RunCli("game --matrix " + pennies + " --rounds 100"), 0);
  EXPECT_EQ(RunCli("game --rounds 100"), 2);
  EXPECT_EQ(RunCli("unknown-kind"), 2);
  EXPECT_EQ(RunCli("game --matrix " + WriteScratch("bad2.csv", "3,0\n") +
                   " --rounds 10"),
            2);
  EXPECT_EQ(RunCli("game --matrix " + pennies + " --rounds x"), 2);
  EXPECT_EQ(RunCli("maxflow --graph " + kData + "/two_parallel.graph"), 0);
}

std::string Slurp(const fs::path& p) { return ReadFile(p.string()); }

TEST(CliTest, RerunIsBitIdentical) {
  const std::string pennies = kData + "/matching_pennies.csv";
  for (const std::string kind : {"game", "game-bandit"}) {
    const fs::path a = Scratch(kind + "_a"), b = Scratch(kind + "_b");
    const std::string base =
        kind + " --matrix " + pennies + " --rounds 300 --seed 9 --out ";
    ASSERT_EQ(RunCli(base + a.string()), 0);
    ASSERT_EQ(RunCli(base + b.string()), 0);
    EXPECT_EQ(Slurp(a.string() + ".trace.csv"),
              Slurp(b.string() + ".trace.csv"));
    const auto summary =
        nlohmann::json::parse(Slurp(a.string() + ".summary.json"));
    if (kind == "game") EXPECT_EQ(summary["certificate_checks"], 300);
    EXPECT_EQ(summary["certificate_failures"], 0);
    EXPECT_EQ(summary["status"], 0);
  }
}

TEST(CliTest, ConfigFile) {
  const std::string cfg = WriteScratch(
      "run.toml", "matrix = \"" + kData + "/matching_pennies.csv\"\n"
                  "rounds = 40\n");
  EXPECT_EQ(RunCli("game --config " + cfg), 0);
}

TEST(TraceCsvTest, Header) {
  Trace t;
  t.columns = {"t", "gap"};
  t.rows = {{1, 0.5}, {2, 0.25}};
  EXPECT_EQ(TraceCsv(t), "t,gap\n1,0.5\n2,0.25\n");
}

}  // namespace
}  // namespace omd
