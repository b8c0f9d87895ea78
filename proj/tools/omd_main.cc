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

// Command-line front end: omd <kind> [--config file] [flags].

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "omd/harness.h"
#include "omd/io.h"
#include "omd/linalg.h"

namespace {

constexpr int kParseFailure = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimistic mirror descent experiments"};
  omd::ExperimentConfig config;
  std::vector<std::string> kinds(std::begin(omd::kExperimentKinds),
                                 std::end(omd::kExperimentKinds));
  bool no_mixing = false;

  app.set_config("--config", "", "key=value file mirroring the flags");
  app.add_option("kind", config.kind, "Experiment kind")
      ->required()
      ->check(CLI::IsMember(kinds));
  app.add_option("--matrix", config.matrix_path, "Payoff matrix CSV");
  app.add_option("--graph", config.graph_path, "Flow network file");
  app.add_option("--rounds", config.rounds, "Horizon T");
  app.add_option("--seed", config.seed, "Random seed");
  auto* delta = app.add_option("--delta", config.delta,
                               "Bandit perturbation size");
  app.add_option("--epsilon", config.epsilon, "Accuracy for cvxprog/maxflow");
  app.add_option("--out", config.out, "Output path prefix");
  app.add_flag("--no-mixing", no_mixing, "Disable uniform mixing (game)");
  app.add_option("--alpha", config.alpha, "Hoelder exponent (holder)");
  app.add_option("--dimension", config.dimension,
                 "Test problem dimension (mirror-prox, holder)");
  app.add_option("--target", config.target, "Target value F* (cvxprog)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseFailure;
  }
  config.mixing = !no_mixing;
  config.delta_set = delta->count() > 0;

  try {
    const omd::ExperimentOutcome outcome = omd::RunExperiment(config);
    if (!config.out.empty()) omd::WriteOutcome(outcome, config.out);
    std::cout << omd::SummaryJson(outcome.summary);
    return outcome.summary.ExitStatus();
  } catch (const omd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const omd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const omd::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParseFailure;
  }
}
