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

#ifndef OMD_CONVEX_PROGRAM_H_
#define OMD_CONVEX_PROGRAM_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "omd/linalg.h"
#include "omd/projection.h"

namespace omd {

// The d constraint functions G_1..G_d, evaluated together.
struct ConstraintOracle {
  std::size_t count = 0;
  // (G_1(f), ..., G_d(f))
  std::function<Vec(std::span<const double>)> values;
  // sum_i y(i) grad G_i(f)
  std::function<Vec(std::span<const double>, std::span<const double>)>
      weighted_gradient;
};

// G_i(f) = <a_i, f> + offset_i. Rows must have unit-bounded l2 norm.
ConstraintOracle LinearConstraints(SparseRows a, Vec offset);

// max c^T f over the ambient affine set subject to G_i(f) <= 1, solved on the
// slice {ambient, c^T f = target}.
struct SmoothCP {
  Vec objective;         // c
  double target = 0.0;   // F*
  ConstraintOracle constraints;
  double smoothness = 0.0;  // H
  Vec interior;             // f_0
  double margin = 0.0;      // gamma
  double radius = 0.0;      // B >= ||f* - g_0||_2
  SparseRows equalities{0};  // ambient affine set
  Vec equality_rhs;
  double projection_tolerance = 1e-8;

  std::size_t dimension() const { return objective.size(); }
  // Throws InvalidInput when an invariant fails: G_i(f_0) <= 1 - gamma,
  // c^T f_0 >= 0, f_0 in the ambient set, d >= 2, constraint gradients with
  // l2 norm <= 1 at f_0.
  void Validate() const;
};

struct CpStepSizes {
  double eta = 0.0;        // variable player
  double eta_prime = 0.0;  // constraint player, 1/eta - H
};

// argmin over eta < 1/H of B^2/eta + eta log d / (1 - eta H), which is
// eta = B / (sqrt(log d) + B H).
CpStepSizes ComputeCpStepSizes(double radius, std::size_t d,
                               double smoothness);

// inf over eta of B^2/eta + eta log d / (1 - eta H) = B^2 H + 2 B sqrt(log d)
double CpInfimum(double radius, std::size_t d, double smoothness);

// Smallest T with T > CpInfimum / epsilon.
int CpAutoRounds(double radius, std::size_t d, double smoothness,
                 double epsilon);

struct CpReport {
  int rounds = 0;
  bool meets_round_bound = false;
  double eta = 0.0;
  double eta_prime = 0.0;
  double alpha = 0.0;
  double max_constraint = 0.0;      // max_i G_i(f-hat)
  double max_constraint_bar = 0.0;  // max_i G_i(f-bar)
  double objective = 0.0;           // c^T f-hat
  double objective_bound = 0.0;     // (1 - epsilon/gamma) F*
  double max_slice_residual = 0.0;  // over all iterates
  bool feasible = false;            // max_constraint <= 1 + 1e-9
  bool objective_ok = false;        // objective >= bound - 1e-9
  bool projection_failed = false;
  std::string message;

  bool ok() const { return feasible && objective_ok && !projection_failed; }
};

struct CpTraceRow {
  int t = 0;
  double max_constraint_bar = 0.0;  // max_i G_i of the running average
  double slice_residual = 0.0;      // ||M_F f_t - b_F||_inf
};

struct CpResult {
  Vec f_hat;
  Vec f_bar;
  CpReport report;
  std::vector<CpTraceRow> trace;  // filled when requested
};

// Runs the coupled optimistic dynamics on phi(f, y) = sum_i y(i) G_i(f)
// with a Euclidean variable player on the slice and an entropy constraint
// player, then blends f-hat = (1 - alpha) f-bar + alpha f_0 with
// alpha = epsilon / (epsilon + gamma). rounds <= 0 selects CpAutoRounds.
CpResult SolveCp(const SmoothCP& problem, double epsilon, int rounds = 0,
                 bool record_trace = false);

}  // namespace omd

#endif  // OMD_CONVEX_PROGRAM_H_
