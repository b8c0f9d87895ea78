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

#ifndef OMD_MAX_FLOW_H_
#define OMD_MAX_FLOW_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "omd/convex_program.h"
#include "omd/linalg.h"

namespace omd {

// Undirected unit-capacity network. Edge e is oriented edges[e].first ->
// edges[e].second; a negative flow runs against the orientation. Nodes are
// 0-indexed.
struct FlowNetwork {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t source = 0;
  std::size_t sink = 0;

  // Rejects self-loops, out-of-range endpoints and source == sink.
  void Validate() const;
  bool Connected() const;  // source reaches sink
};

struct FlowReport {
  double value = 0.0;                 // net flow out of the source
  double max_violation = 0.0;         // max(0, max_e |f_e| - 1)
  double conservation_residual = 0.0; // max over non-terminal nodes
  Vec node_residuals;                 // inflow - outflow, terminals zeroed
};

FlowReport CheckFlow(const FlowNetwork& network, std::span<const double> flows);

struct FlowSearchStep {
  double target = 0.0;
  bool accepted = false;
  int rounds = 0;
  double max_constraint = 0.0;  // max_i G_i of the blended flow
  double slice_residual = 0.0;
};

struct FlowSolution {
  Vec flows;
  double value = 0.0;
  double max_violation = 0.0;
  double conservation_residual = 0.0;
  int total_rounds = 0;      // rounds summed over all binary-search solves
  int rounds_per_solve = 0;
  int solves = 0;
  double accepted_target = 0.0;
  std::vector<FlowSearchStep> steps;
};

// The convex program for a fixed target value F*: 2d constraints +-f_e,
// conservation at non-terminal nodes, c = net source outflow, f_0 = 0,
// gamma = 1, B = 2 sqrt(d).
SmoothCP FlowProgram(const FlowNetwork& network, double target);

// Binary search over F* in [0, min(deg s, deg t)]. Each candidate is solved
// to accuracy epsilon / 2 and accepted when the blended flow is feasible;
// the search stops once hi - lo <= (epsilon / 4) max(lo, 1). Returns the flow
// of the largest accepted candidate, or the zero flow when the sink is not
// reachable.
FlowSolution MaxFlow(const FlowNetwork& network, double epsilon);

}  // namespace omd

#endif  // OMD_MAX_FLOW_H_
