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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "omd/bandit.h"
#include "omd/convex_program.h"
#include "omd/game.h"
#include "omd/io.h"
#include "omd/offline.h"
#include "omd/saddle.h"

namespace omd {
namespace {

constexpr double kCertTol = 1e-9;

bool KnownKind(const std::string& kind) {
  return std::find(std::begin(kExperimentKinds), std::end(kExperimentKinds),
                   kind) != std::end(kExperimentKinds);
}

bool Within(double lhs, double rhs) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return lhs <= rhs + kCertTol * scale;
}

// Slope over prefixes t = 10, 20, 40, ... of a per-round value series.
double PrefixSlope(const std::vector<double>& values) {
  std::vector<double> ts, vs;
  for (std::size_t t = 10; t <= values.size(); t *= 2) {
    const double v = values[t - 1];
    if (!(v > 0.0) || !std::isfinite(v)) return std::nan("");
    ts.push_back(static_cast<double>(t));
    vs.push_back(v);
  }
  if (ts.size() < 3) return std::nan("");
  return FitRate(ts, vs);
}

Vec RandomTarget(std::size_t n, double norm, std::uint64_t seed) {
  std::seed_seq seq{seed, std::uint64_t{0}};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> draw(0.0, 1.0);
  Vec p(n);
  for (double& v : p) v = draw(rng);
  const double s = NormL2(p);
  for (double& v : p) v *= norm / s;
  return p;
}

void RunOffline(const ExperimentConfig& c, ExperimentOutcome& out) {
  const bool prox = c.kind == "mirror-prox";
  const double alpha = prox ? 1.0 : c.alpha;
  const Vec target =
      RandomTarget(static_cast<std::size_t>(c.dimension), prox ? 2.0 : 0.5,
                   c.seed);
  const PowerDistanceProblem inst = MakePowerDistanceProblem(target, alpha, 1.0);
  const SmoothProblem& p = inst.problem;
  const OfflineResult r =
      prox ? MirrorProx(p, c.rounds) : HolderOptimize(p, c.rounds);

  out.trace.columns = {"t", "eta", "suboptimality", "cert_lhs", "cert_rhs"};
  const Vec& star = inst.minimizer;
  const Vec& g0 = r.trajectory.front().previous_secondary;
  const double divergence = Bregman(p.map, star, g0) / r.eta;
  double lhs = 0.0, variance = 0.0, negative = 0.0;
  Vec sum(target.size(), 0.0);
  std::vector<double> values;
  ExperimentSummary& s = out.summary;
  for (std::size_t i = 0; i < r.trajectory.size(); ++i) {
    const OmdStep& st = r.trajectory[i];
    lhs += Dot(Subtract(st.played, star), st.gradient);
    const double a = p.map.Norm(Subtract(st.secondary, st.played));
    const double b = p.map.Norm(Subtract(st.previous_secondary, st.played));
    variance += p.map.DualNorm(Subtract(st.gradient, st.prediction)) * a;
    negative += (a * a + b * b) / (2.0 * st.eta);
    const double rhs = divergence + variance - negative;
    sum = Axpy(sum, 1.0, st.played);
    const double t = static_cast<double>(i + 1);
    const double sub = p.value(Scale(sum, 1.0 / t)) - inst.optimum;
    values.push_back(sub);
    out.trace.rows.push_back({t, st.eta, sub, lhs, rhs});
    ++s.certificate_checks;
    if (!Within(lhs, rhs)) ++s.certificate_failures;
  }
  s.final_value = values.back();
  s.bound = prox ? p.smoothness * p.radius * p.radius / c.rounds
                 : HolderBound(p.radius, p.smoothness, alpha, c.rounds);
  s.slope = PrefixSlope(values);
  s.guarantee_ok = s.final_value <= s.bound + kCertTol;
  s.extra = {{"eta", r.eta},
             {"alpha", alpha},
             {"smoothness", p.smoothness},
             {"radius", p.radius}};
}

void RunSaddle(const ExperimentConfig& c, ExperimentOutcome& out) {
  const PayoffMatrix a = ParseMatrix(ReadFile(c.matrix_path));
  const SaddleResult r = SaddleSolve(BilinearSaddle(a.entries()), c.rounds);
  out.trace.columns = {"t", "eta_f", "eta_x", "gap", "cert_lhs", "cert_rhs"};
  std::vector<double> values;
  ExperimentSummary& s = out.summary;
  for (const SaddleTraceRow& row : r.trace) {
    out.trace.rows.push_back({static_cast<double>(row.t), row.eta_f,
                              row.eta_x, row.gap, row.cert_lhs, row.cert_rhs});
    values.push_back(row.gap);
    ++s.certificate_checks;
    if (!Within(row.cert_lhs, row.cert_rhs)) ++s.certificate_failures;
  }
  s.final_value = r.gap;
  s.bound = r.regret_bound;
  s.slope = PrefixSlope(values);
}

void AppendGameRows(const std::vector<GameTraceRow>& trace, Trace& out,
                    std::vector<double>& values) {
  out.columns = {"t",          "eta_row",      "eta_col",
                 "gap",        "cert_lhs_row", "cert_rhs_row",
                 "cert_lhs_col", "cert_rhs_col"};
  for (const GameTraceRow& r : trace) {
    out.rows.push_back({static_cast<double>(r.t), r.eta_row, r.eta_col, r.gap,
                        r.cert_lhs_row, r.cert_rhs_row, r.cert_lhs_col,
                        r.cert_rhs_col});
    values.push_back(r.gap);
  }
}

void RunGame(const ExperimentConfig& c, ExperimentOutcome& out) {
  const PayoffMatrix a = ParseMatrix(ReadFile(c.matrix_path));
  MatchOptions options;
  options.mixing = c.mixing;
  const MatchResult r = RunFullInfoMatch(a, c.rounds, options);
  std::vector<double> values;
  AppendGameRows(r.trace, out.trace, values);
  ExperimentSummary& s = out.summary;
  s.certificate_checks = r.certificate_checks;
  s.certificate_failures = r.certificate_failures;
  s.final_value = r.gap;
  s.bound = FullInfoGapBound(a.rows(), a.cols(), c.rounds);
  s.guarantee_ok = r.gap <= s.bound;
  s.slope = PrefixSlope(values);
}

void RunBandit(const ExperimentConfig& c, ExperimentOutcome& out) {
  const PayoffMatrix a = ParseMatrix(ReadFile(c.matrix_path));
  BanditOptions options;
  options.seed = c.seed;
  options.delta = c.delta;
  options.explicit_delta = c.delta_set;
  const BanditResult r = RunBanditMatch(a, c.rounds, options);
  std::vector<double> values;
  AppendGameRows(r.trace, out.trace, values);
  ExperimentSummary& s = out.summary;
  for (const GameTraceRow& row : r.trace) {
    ++s.certificate_checks;
    if (!(row.cert_lhs_row <= row.cert_rhs_row) ||
        !(row.cert_lhs_col <= row.cert_rhs_col)) {
      ++s.certificate_failures;
    }
  }
  s.final_value = r.gap;
  s.slope = PrefixSlope(values);
  s.extra = {{"delta", r.delta}};
}

SmoothCP BoxProgram(double target) {
  SparseRows g(1);
  g.AddRow({{0, 1.0}});
  g.AddRow({{0, -1.0}});
  SmoothCP cp;
  cp.objective = {1.0};
  cp.target = target;
  cp.constraints = LinearConstraints(std::move(g), {0.0, 0.0});
  cp.interior = {0.0};
  cp.margin = 1.0;
  cp.radius = 2.0;
  return cp;
}

void RunCvx(const ExperimentConfig& c, ExperimentOutcome& out) {
  SmoothCP cp;
  if (!c.graph_path.empty()) {
    const FlowNetwork net = ParseGraph(ReadFile(c.graph_path));
    if (std::isnan(c.target)) throw ConfigError("cvxprog with a graph needs target");
    cp = FlowProgram(net, c.target);
  } else {
    cp = BoxProgram(std::isnan(c.target) ? 0.5 : c.target);
  }
  const CpResult r = SolveCp(cp, c.epsilon, 0, true);
  out.trace.columns = {"t",  "eta", "eta_prime", "max_constraint_bar",
                       "cert_lhs", "cert_rhs"};
  ExperimentSummary& s = out.summary;
  for (const CpTraceRow& row : r.trace) {
    out.trace.rows.push_back({static_cast<double>(row.t), r.report.eta,
                              r.report.eta_prime, row.max_constraint_bar,
                              row.slice_residual, cp.projection_tolerance});
    ++s.certificate_checks;
    if (!(row.slice_residual <= cp.projection_tolerance)) {
      ++s.certificate_failures;
    }
  }
  s.rounds = r.report.rounds;
  s.final_value = r.report.objective;
  s.bound = r.report.objective_bound;
  s.guarantee_ok = r.report.ok();
  s.extra = {{"max_constraint", r.report.max_constraint},
             {"alpha", r.report.alpha},
             {"target", cp.target}};
}

void RunMaxFlow(const ExperimentConfig& c, ExperimentOutcome& out) {
  FlowNetwork net = ParseGraph(ReadFile(c.graph_path));
  FlowSolution sol = MaxFlow(net, c.epsilon);
  out.trace.columns = {"t", "target", "rounds", "accepted", "max_constraint",
                       "slice_residual"};
  ExperimentSummary& s = out.summary;
  for (std::size_t i = 0; i < sol.steps.size(); ++i) {
    const FlowSearchStep& st = sol.steps[i];
    out.trace.rows.push_back({static_cast<double>(i + 1), st.target,
                              static_cast<double>(st.rounds),
                              st.accepted ? 1.0 : 0.0, st.max_constraint,
                              st.slice_residual});
    ++s.certificate_checks;
    if (st.slice_residual > 1e-8 ||
        (st.accepted && st.max_constraint > 1.0 + kCertTol)) {
      ++s.certificate_failures;
    }
  }
  s.rounds = sol.total_rounds;
  s.final_value = sol.value;
  s.guarantee_ok =
      sol.max_violation <= 1e-7 && sol.conservation_residual <= 1e-7;
  s.extra = {{"max_violation", sol.max_violation},
             {"conservation_residual", sol.conservation_residual},
             {"solves", static_cast<double>(sol.solves)},
             {"rounds_per_solve", static_cast<double>(sol.rounds_per_solve)}};
  out.network = std::move(net);
  out.flow = std::move(sol);
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (!KnownKind(kind)) throw ConfigError("unknown kind '" + kind + "'");
  if (rounds < 1) throw ConfigError("rounds must be >= 1");
  const bool needs_matrix =
      kind == "saddle" || kind == "game" || kind == "game-bandit";
  if (needs_matrix && matrix_path.empty()) {
    throw ConfigError(kind + " needs --matrix");
  }
  if (kind == "maxflow" && graph_path.empty()) {
    throw ConfigError("maxflow needs --graph");
  }
  if (kind == "game-bandit" && rounds < 2) {
    throw ConfigError("game-bandit needs rounds >= 2");
  }
  if ((kind == "maxflow" || kind == "cvxprog") &&
      !(epsilon > 0.0 && epsilon < 1.0)) {
    throw ConfigError("epsilon must lie in (0, 1)");
  }
  if (kind == "holder" && !(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("alpha must lie in [0, 1]");
  }
  if ((kind == "mirror-prox" || kind == "holder") && dimension < 1) {
    throw ConfigError("dimension must be >= 1");
  }
  if (!(delta > 0.0)) throw ConfigError("delta must be positive");
}

ExperimentOutcome RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  ExperimentOutcome out;
  out.summary.kind = config.kind;
  out.summary.rounds = config.rounds;
  const auto start = std::chrono::steady_clock::now();
  const std::string& k = config.kind;
  if (k == "mirror-prox" || k == "holder") {
    RunOffline(config, out);
  } else if (k == "saddle") {
    RunSaddle(config, out);
  } else if (k == "game") {
    RunGame(config, out);
  } else if (k == "game-bandit") {
    RunBandit(config, out);
  } else if (k == "cvxprog") {
    RunCvx(config, out);
  } else {
    RunMaxFlow(config, out);
  }
  out.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

std::string TraceCsv(const Trace& trace) {
  std::string s;
  for (std::size_t i = 0; i < trace.columns.size(); ++i) {
    if (i > 0) s += ',';
    s += trace.columns[i];
  }
  s += '\n';
  for (const auto& row : trace.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) s += ',';
      s += FormatReal(row[i]);
    }
    s += '\n';
  }
  return s;
}

std::string SummaryJson(const ExperimentSummary& summary) {
  // JSON has no NaN; undefined quantities become null.
  auto num = [](double v) -> nlohmann::json {
    if (!std::isfinite(v)) return nullptr;
    return v;
  };
  nlohmann::ordered_json j;
  j["kind"] = summary.kind;
  j["rounds"] = summary.rounds;
  j["final_value"] = num(summary.final_value);
  j["bound"] = num(summary.bound);
  j["slope"] = num(summary.slope);
  j["certificate_checks"] = summary.certificate_checks;
  j["certificate_failures"] = summary.certificate_failures;
  j["guarantee_ok"] = summary.guarantee_ok;
  for (const auto& [key, value] : summary.extra) j[key] = num(value);
  j["wall_seconds"] = summary.wall_seconds;
  j["status"] = summary.ExitStatus();
  return j.dump(2) + "\n";
}

std::string FlowCsv(const FlowNetwork& network, const FlowSolution& flow) {
  std::string s = "edge_index,u,v,flow\n";
  for (std::size_t e = 0; e < network.edges.size(); ++e) {
    s += std::to_string(e + 1) + ',' +
         std::to_string(network.edges[e].first + 1) + ',' +
         std::to_string(network.edges[e].second + 1) + ',' +
         FormatReal(flow.flows[e]) + '\n';
  }
  s += "value," + FormatReal(flow.value) + '\n';
  return s;
}

void WriteOutcome(const ExperimentOutcome& outcome, const std::string& out) {
  auto write = [](const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << body;
  };
  write(out + ".trace.csv", TraceCsv(outcome.trace));
  write(out + ".summary.json", SummaryJson(outcome.summary));
  if (outcome.network && outcome.flow) {
    write(out + ".flow.csv", FlowCsv(*outcome.network, *outcome.flow));
  }
}

double FitRate(std::span<const double> horizons,
               std::span<const double> values) {
  if (horizons.size() != values.size()) {
    throw InvalidInput("horizons and values differ in length");
  }
  if (horizons.size() < 3) throw InvalidInput("need at least 3 points");
  const std::size_t k = horizons.size();
  double mx = 0.0, my = 0.0;
  std::vector<double> x(k), y(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!(horizons[i] > 0.0) || !(values[i] > 0.0)) {
      throw InvalidInput("horizons and values must be positive");
    }
    x[i] = std::log(horizons[i]);
    y[i] = std::log(values[i]);
    mx += x[i];
    my += y[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (!(sxx > 0.0)) throw InvalidInput("horizons must not all be equal");
  return sxy / sxx;
}

}  // namespace omd
