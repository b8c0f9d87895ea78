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

#include "omd/convex_program.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include "omd/mirror_map.h"
#include "omd/saddle.h"

namespace omd {
namespace {

constexpr double kFeasibilitySlack = 1e-9;

double RowNorm(std::span<const SparseRows::Entry> row) {
  double s = 0.0;
  for (const auto& e : row) s += e.value * e.value;
  return std::sqrt(s);
}

// Ambient equalities plus c^T f = F*.
AffineSet SliceOf(const SmoothCP& p) {
  AffineSet set;
  set.constraints = p.equalities.rows() > 0 ? p.equalities
                                            : SparseRows(p.dimension());
  std::vector<SparseRows::Entry> row;
  for (std::size_t i = 0; i < p.objective.size(); ++i) {
    if (p.objective[i] != 0.0) row.push_back({i, p.objective[i]});
  }
  set.constraints.AddRow(std::move(row));
  set.rhs = p.equality_rhs;
  set.rhs.push_back(p.target);
  set.tolerance = p.projection_tolerance;
  return set;
}

}  // namespace

ConstraintOracle LinearConstraints(SparseRows a, Vec offset) {
  if (offset.size() != a.rows()) {
    throw InvalidInput("offset length must match constraint count");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (RowNorm(a.row(i)) > 1.0 + 1e-12) {
      throw InvalidInput("linear constraint is not 1-Lipschitz");
    }
  }
  ConstraintOracle oracle;
  oracle.count = a.rows();
  auto shared = std::make_shared<const SparseRows>(std::move(a));
  auto shift = std::make_shared<const Vec>(std::move(offset));
  oracle.values = [shared, shift](std::span<const double> f) {
    Vec v = shared->Apply(f);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += (*shift)[i];
    return v;
  };
  oracle.weighted_gradient = [shared](std::span<const double>,
                                      std::span<const double> y) {
    return shared->ApplyTransposed(y);
  };
  return oracle;
}

void SmoothCP::Validate() const {
  const std::size_t n = dimension();
  if (n == 0) throw InvalidInput("empty objective");
  if (!AllFinite(objective) || !std::isfinite(target)) {
    throw InvalidInput("objective must be finite");
  }
  if (constraints.count < 2) throw InvalidInput("need at least 2 constraints");
  if (!constraints.values || !constraints.weighted_gradient) {
    throw InvalidInput("constraint oracles missing");
  }
  if (interior.size() != n) throw InvalidInput("f0 has wrong dimension");
  if (!(margin > 0.0)) throw InvalidInput("gamma must be positive");
  if (!(radius > 0.0)) throw InvalidInput("B must be positive");
  if (!(smoothness >= 0.0)) throw InvalidInput("H must be nonnegative");
  if (equalities.cols() != n && equalities.rows() > 0) {
    throw InvalidInput("equality matrix has wrong width");
  }
  if (equality_rhs.size() != equalities.rows()) {
    throw InvalidInput("equality rhs has wrong length");
  }
  if (!(projection_tolerance > 0.0)) {
    throw InvalidInput("projection tolerance must be positive");
  }

  const Vec g0 = constraints.values(interior);
  if (g0.size() != constraints.count) {
    throw InvalidInput("constraint oracle returned wrong length");
  }
  for (double v : g0) {
    if (!(v <= 1.0 - margin + 1e-12)) {
      throw InvalidInput("f0 violates the margin G_i(f0) <= 1 - gamma");
    }
  }
  if (Dot(objective, interior) < 0.0) {
    throw InvalidInput("c^T f0 must be nonnegative");
  }
  if (equalities.rows() > 0) {
    const Vec r = Subtract(equalities.Apply(interior), equality_rhs);
    if (NormInf(r) > projection_tolerance) {
      throw InvalidInput("f0 is not in the ambient affine set");
    }
  }
  Vec unit(constraints.count, 0.0);
  for (std::size_t i = 0; i < constraints.count; ++i) {
    unit[i] = 1.0;
    if (NormL2(constraints.weighted_gradient(interior, unit)) > 1.0 + 1e-9) {
      throw InvalidInput("constraint gradient exceeds unit l2 norm");
    }
    unit[i] = 0.0;
  }
}

CpStepSizes ComputeCpStepSizes(double radius, std::size_t d,
                               double smoothness) {
  if (d < 2) throw InvalidInput("need d >= 2 constraints");
  if (!(radius > 0.0)) throw InvalidInput("B must be positive");
  if (!(smoothness >= 0.0)) throw InvalidInput("H must be nonnegative");
  const double root = std::sqrt(std::log(static_cast<double>(d)));
  CpStepSizes s;
  s.eta = radius / (root + radius * smoothness);
  s.eta_prime = 1.0 / s.eta - smoothness;
  return s;
}

double CpInfimum(double radius, std::size_t d, double smoothness) {
  if (d < 2) throw InvalidInput("need d >= 2 constraints");
  const double root = std::sqrt(std::log(static_cast<double>(d)));
  return radius * radius * smoothness + 2.0 * radius * root;
}

int CpAutoRounds(double radius, std::size_t d, double smoothness,
                 double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
  const double bound = CpInfimum(radius, d, smoothness) / epsilon;
  if (bound >= 1e9) throw InvalidInput("round bound too large");
  return static_cast<int>(std::floor(bound)) + 1;
}

CpResult SolveCp(const SmoothCP& problem, double epsilon, int rounds,
                 bool record_trace) {
  problem.Validate();
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidInput("epsilon must be positive");
  }
  const std::size_t n = problem.dimension();
  const std::size_t d = problem.constraints.count;
  const int required =
      CpAutoRounds(problem.radius, d, problem.smoothness, epsilon);
  const CpStepSizes steps =
      ComputeCpStepSizes(problem.radius, d, problem.smoothness);

  CpResult result;
  CpReport& report = result.report;
  report.rounds = rounds > 0 ? rounds : required;
  report.meets_round_bound = report.rounds >= required;
  report.eta = steps.eta;
  report.eta_prime = steps.eta_prime;
  report.alpha = epsilon / (epsilon + problem.margin);
  report.objective_bound = (1.0 - epsilon / problem.margin) * problem.target;

  AffineSet slice = SliceOf(problem);
  const SparseRows slice_rows = slice.constraints;
  const Vec slice_rhs = slice.rhs;
  const ConstraintOracle& oracle = problem.constraints;

  SaddleProblem game{
      .grad_f = [&oracle](std::span<const double> f,
                          std::span<const double> y) {
        return oracle.weighted_gradient(f, y);
      },
      .grad_x = [&oracle](std::span<const double> f,
                          std::span<const double>) {
        return oracle.values(f);
      },
      .map_f = MirrorMap::Euclidean(n, std::move(slice)),
      .map_x = MirrorMap::NegativeEntropy(d),
      .smoothness = {problem.smoothness, 1.0, 1.0, 0.0},
      .exponents = {1.0, 1.0, 1.0, 1.0},
      .radius_f = problem.radius,
      .radius_x = std::sqrt(std::log(static_cast<double>(d))),
  };

  double worst = 0.0;
  Vec running(n, 0.0);
  auto observer = [&](int t, const OmdStep& f_step, const OmdStep&) {
    const Vec r = Subtract(slice_rows.Apply(f_step.played), slice_rhs);
    const double residual = NormInf(r);
    worst = std::max(worst, residual);
    if (!record_trace) return;
    running = Axpy(running, 1.0, f_step.played);
    CpTraceRow row;
    row.t = t;
    row.max_constraint_bar =
        MaxEntry(oracle.values(Scale(running, 1.0 / t)));
    row.slice_residual = residual;
    result.trace.push_back(row);
  };

  SaddleResult dynamics;
  try {
    dynamics = RunCoupledDynamics(game, report.rounds, steps.eta,
                                  steps.eta_prime, observer);
  } catch (const ProjectionError& e) {
    report.projection_failed = true;
    report.message = e.what();
    report.max_slice_residual = e.residual();
    return result;
  }

  report.max_slice_residual = worst;
  result.f_bar = std::move(dynamics.f_bar);
  result.f_hat = Axpy(Scale(result.f_bar, 1.0 - report.alpha), report.alpha,
                      problem.interior);
  report.max_constraint = MaxEntry(oracle.values(result.f_hat));
  report.max_constraint_bar = MaxEntry(oracle.values(result.f_bar));
  report.objective = Dot(problem.objective, result.f_hat);
  report.feasible = report.max_constraint <= 1.0 + kFeasibilitySlack;
  report.objective_ok =
      report.objective >= report.objective_bound - kFeasibilitySlack;
  if (!report.feasible) report.message = "blended point violates a constraint";
  return result;
}

}  // namespace omd
