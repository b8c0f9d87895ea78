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

#ifndef OMD_HARNESS_H_
#define OMD_HARNESS_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omd/max_flow.h"

namespace omd {

inline constexpr const char* kExperimentKinds[] = {
    "mirror-prox", "holder", "saddle", "game",
    "game-bandit", "cvxprog", "maxflow"};

// Invalid or incomplete experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string kind;
  std::string matrix_path;
  std::string graph_path;
  int rounds = 1000;
  std::uint64_t seed = 0;
  double delta = 1e-6;
  bool delta_set = false;  // an explicit delta is rejected, not clamped
  double epsilon = 0.1;
  std::string out;  // path prefix; empty writes nothing
  bool mixing = true;
  double alpha = 1.0;        // holder exponent
  int dimension = 5;         // offline test problem dimension
  double target = std::numeric_limits<double>::quiet_NaN();  // cvxprog F*

  // Throws ConfigError naming the first missing or invalid field.
  void Validate() const;
};

// Rows are numeric; column 0 is the round (or search step) index.
struct Trace {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ExperimentSummary {
  std::string kind;
  int rounds = 0;
  double final_value = 0.0;  // suboptimality, gap, or flow value
  double bound = std::numeric_limits<double>::quiet_NaN();
  double slope = std::numeric_limits<double>::quiet_NaN();
  int certificate_checks = 0;
  int certificate_failures = 0;
  bool guarantee_ok = true;  // end-of-run guarantee where one applies
  double wall_seconds = 0.0;
  std::vector<std::pair<std::string, double>> extra;

  int ExitStatus() const {
    return certificate_failures == 0 && guarantee_ok ? 0 : 1;
  }
};

struct ExperimentOutcome {
  Trace trace;
  ExperimentSummary summary;
  std::optional<FlowNetwork> network;
  std::optional<FlowSolution> flow;
};

// Reads instance files, dispatches on kind and collects the trace. Parse
// failures surface as ParseError, configuration problems as ConfigError.
ExperimentOutcome RunExperiment(const ExperimentConfig& config);

// <out>.trace.csv, <out>.summary.json and, for maxflow, <out>.flow.csv.
void WriteOutcome(const ExperimentOutcome& outcome, const std::string& out);

std::string TraceCsv(const Trace& trace);
std::string SummaryJson(const ExperimentSummary& summary);
std::string FlowCsv(const FlowNetwork& network, const FlowSolution& flow);

// Least-squares slope of log(value) against log(horizon).
double FitRate(std::span<const double> horizons,
               std::span<const double> values);

}  // namespace omd

#endif  // OMD_HARNESS_H_
