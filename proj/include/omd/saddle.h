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

#ifndef OMD_SADDLE_H_
#define OMD_SADDLE_H_

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "omd/linalg.h"
#include "omd/mirror_map.h"
#include "omd/optimistic.h"

namespace omd {

using SaddleGradient =
    std::function<Vec(std::span<const double>, std::span<const double>)>;
using SaddleValue =
    std::function<double(std::span<const double>, std::span<const double>)>;

// min over f, max over x of phi(f, x), convex-concave.
struct SaddleProblem {
  SaddleGradient grad_f;
  SaddleGradient grad_x;
  SaddleValue value;  // optional
  MirrorMap map_f;
  MirrorMap map_x;
  // H1..H4 and alpha, alpha', beta, beta' of the cross-Hoelder condition.
  std::array<double, 4> smoothness{1.0, 1.0, 1.0, 1.0};
  std::array<double, 4> exponents{1.0, 1.0, 1.0, 1.0};
  double radius_f = 1.0;  // R1, D(f*, g_0) <= R1^2
  double radius_x = 1.0;  // R2
  // Exact duality gap of averaged points, when one is computable.
  SaddleValue gap_oracle;

  double H() const;
  double gamma() const;
};

struct SaddleTraceRow {
  int t = 0;
  double eta_f = 0.0;
  double eta_x = 0.0;
  double gap = 0.0;       // gap of the running averages (or bound / t)
  double cert_lhs = 0.0;  // t * gap; NaN without a gap oracle
  double cert_rhs = 0.0;  // summed regret bounds of both learners
};

struct SaddleResult {
  Vec f_bar;
  Vec x_bar;
  // Exact gap when the problem has a gap oracle; otherwise the summed
  // regret-bound upper estimate divided by T.
  double gap = 0.0;
  bool gap_is_exact = false;
  double regret_bound = 0.0;  // (RHS_1 + RHS_2) / T
  std::vector<SaddleTraceRow> trace;
};

// Called after every round with both learners' completed steps.
using SaddleObserver =
    std::function<void(int t, const OmdStep& f_step, const OmdStep& x_step)>;

// (R1^2 + R2^2)^{(1-g)/2} (2H)^{-1} (T/2)^{(g-1)/2}
double SaddleEta(double radius_f, double radius_x, double smoothness,
                 double gamma, int rounds);

// Both learners run Optimistic Mirror Descent with predictions
// grad phi(g_{t-1}, y_{t-1}); the x-learner receives negated gradients so
// both minimize. Step sizes from SaddleEta.
SaddleResult SaddleSolve(const SaddleProblem& problem, int rounds);

// Same dynamics with explicit step sizes.
SaddleResult RunCoupledDynamics(const SaddleProblem& problem, int rounds,
                                double eta_f, double eta_x,
                                const SaddleObserver& observer = {});

// max_j (f^T A)_j - min_i (A x)_i
double BilinearGap(const Matrix& a, std::span<const double> f,
                   std::span<const double> x);

// phi(f, x) = f^T A x on simplex x simplex with entropy maps, gamma = 1,
// R1^2 = log n, R2^2 = log m. `smoothness` must bound every |a_ij|.
SaddleProblem BilinearSaddle(const Matrix& a, double smoothness = 1.0);

}  // namespace omd

#endif  // OMD_SADDLE_H_
