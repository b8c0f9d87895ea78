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

#include "omd/max_flow.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace omd {

void FlowNetwork::Validate() const {
  if (nodes < 2) throw InvalidInput("network needs at least two nodes");
  if (source >= nodes || sink >= nodes) {
    throw InvalidInput("terminal out of range");
  }
  if (source == sink) throw InvalidInput("source equals sink");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u >= nodes || v >= nodes) {
      throw InvalidInput("edge " + std::to_string(e) + " out of range");
    }
    if (u == v) throw InvalidInput("edge " + std::to_string(e) + " is a loop");
  }
}

bool FlowNetwork::Connected() const {
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(nodes, false);
  std::queue<std::size_t> frontier;
  frontier.push(source);
  seen[source] = true;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    if (u == sink) return true;
    for (std::size_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        frontier.push(v);
      }
    }
  }
  return false;
}

FlowReport CheckFlow(const FlowNetwork& network,
                     std::span<const double> flows) {
  if (flows.size() != network.edges.size()) {
    throw InvalidInput("flow vector has wrong length");
  }
  FlowReport r;
  r.node_residuals.assign(network.nodes, 0.0);
  for (std::size_t e = 0; e < flows.size(); ++e) {
    const auto [u, v] = network.edges[e];
    r.node_residuals[u] -= flows[e];
    r.node_residuals[v] += flows[e];
    r.max_violation = std::max(r.max_violation, std::abs(flows[e]) - 1.0);
  }
  r.value = -r.node_residuals[network.source];
  r.node_residuals[network.source] = 0.0;
  r.node_residuals[network.sink] = 0.0;
  r.conservation_residual = NormInf(r.node_residuals);
  return r;
}

SmoothCP FlowProgram(const FlowNetwork& network, double target) {
  network.Validate();
  const std::size_t d = network.edges.size();
  if (d == 0) throw InvalidInput("network has no edges");

  std::vector<std::vector<SparseRows::Entry>> incidence(network.nodes);
  Vec objective(d, 0.0);
  for (std::size_t e = 0; e < d; ++e) {
    const auto [u, v] = network.edges[e];
    incidence[u].push_back({e, 1.0});
    incidence[v].push_back({e, -1.0});
    if (u == network.source) objective[e] += 1.0;
    if (v == network.source) objective[e] -= 1.0;
  }
  SparseRows conservation(d);
  for (std::size_t node = 0; node < network.nodes; ++node) {
    if (node == network.source || node == network.sink) continue;
    if (incidence[node].empty()) continue;
    conservation.AddRow(std::move(incidence[node]));
  }

  SparseRows bounds(d);
  for (std::size_t e = 0; e < d; ++e) bounds.AddRow({{e, 1.0}});
  for (std::size_t e = 0; e < d; ++e) bounds.AddRow({{e, -1.0}});

  SmoothCP cp;
  cp.objective = std::move(objective);
  cp.target = target;
  cp.constraints = LinearConstraints(std::move(bounds), Vec(2 * d, 0.0));
  cp.smoothness = 0.0;
  cp.interior = Vec(d, 0.0);
  cp.margin = 1.0;
  cp.radius = 2.0 * std::sqrt(static_cast<double>(d));
  cp.equality_rhs = Vec(conservation.rows(), 0.0);
  cp.equalities = std::move(conservation);
  return cp;
}

FlowSolution MaxFlow(const FlowNetwork& network, double epsilon) {
  network.Validate();
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidInput("epsilon must lie in (0, 1)");
  }
  const std::size_t d = network.edges.size();
  FlowSolution best;
  best.flows.assign(d, 0.0);
  if (d == 0 || !network.Connected()) {
    const FlowReport r = CheckFlow(network, best.flows);
    best.conservation_residual = r.conservation_residual;
    return best;
  }

  std::size_t deg_s = 0, deg_t = 0;
  for (const auto& [u, v] : network.edges) {
    if (u == network.source || v == network.source) ++deg_s;
    if (u == network.sink || v == network.sink) ++deg_t;
  }
  const double inner_eps = 0.5 * epsilon;
  double lo = 0.0;
  double hi = static_cast<double>(std::min(deg_s, deg_t));

  while (hi - lo > 0.25 * epsilon * std::max(lo, 1.0)) {
    const double mid = 0.5 * (lo + hi);
    const CpResult solved = SolveCp(FlowProgram(network, mid), inner_eps);
    ++best.solves;
    best.total_rounds += solved.report.rounds;
    best.rounds_per_solve = solved.report.rounds;
    FlowSearchStep step;
    step.target = mid;
    step.rounds = solved.report.rounds;
    step.max_constraint = solved.report.max_constraint;
    step.slice_residual = solved.report.max_slice_residual;
    step.accepted =
        solved.report.feasible && !solved.report.projection_failed;
    best.steps.push_back(step);
    if (step.accepted) {
      lo = mid;
      best.flows = solved.f_hat;
      best.accepted_target = mid;
    } else {
      hi = mid;
    }
  }

  const FlowReport r = CheckFlow(network, best.flows);
  best.value = r.value;
  best.max_violation = std::max(0.0, r.max_violation);
  best.conservation_residual = r.conservation_residual;
  return best;
}

}  // namespace omd
