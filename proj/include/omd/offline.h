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

#ifndef OMD_OFFLINE_H_
#define OMD_OFFLINE_H_

#include <functional>
#include <random>
#include <span>
#include <vector>

#include "omd/linalg.h"
#include "omd/mirror_map.h"
#include "omd/optimistic.h"

namespace omd {

using ValueOracle = std::function<double(std::span<const double>)>;

// A convex G with ||grad G(f) - grad G(g)||_* <= H ||f - g||^alpha.
//
// `radius` is the divergence bound R fed to the step-size formula. Callers
// choose the reading: R = sqrt(sup D(f, g_0)) matches the rate proof, while
// R = sup D(f, g_0) matches the literal statement of the guarantee.
struct SmoothProblem {
  GradientOracle gradient;
  ValueOracle value;  // optional
  double smoothness = 1.0;       // H
  double holder_exponent = 1.0;  // alpha in [0, 1]
  MirrorMap map;
  double radius = 1.0;  // R
};

struct OfflineResult {
  Vec average;  // (1/T) sum f_t
  double eta = 0.0;
  std::vector<OmdStep> trajectory;
};

// Optimistic Mirror Descent with M_t = grad G(g_{t-1}) and eta = 1/H.
// Requires alpha = 1.
OfflineResult MirrorProx(const SmoothProblem& problem, int rounds);

// R^{1-a} H^{-1} (1+a)^{-(1+a)/2} (1-a)^{-(1-a)/2} T^{-(1-a)/2}, 0^0 := 1.
double HolderEta(double radius, double smoothness, double alpha, int rounds);

// 8 H R^{1+a} / T^{(1+a)/2}
double HolderBound(double radius, double smoothness, double alpha, int rounds);

// Same dynamics as MirrorProx with eta = HolderEta(R, H, alpha, T).
OfflineResult HolderOptimize(const SmoothProblem& problem, int rounds);

// Spot-checks the Hoelder inequality on every ordered pair of `points`,
// with (1 + 1e-6) slack on H.
bool CheckHolderSmoothness(const SmoothProblem& problem,
                           std::span<const Vec> points);

// G(f) = sum_i |f_i - p_i|^{1+a} / (1+a) over the Euclidean ball of radius r.
// Its gradient sign(f_i - p_i) |f_i - p_i|^a is a-Hoelder in l2 with
// H = 2^{1-a} n^{(1-a)/2}. R is set to the radius reading r / sqrt(2).
struct PowerDistanceProblem {
  SmoothProblem problem;
  Vec minimizer;
  double optimum = 0.0;  // G* from the closed form
};
PowerDistanceProblem MakePowerDistanceProblem(std::span<const double> target,
                                              double alpha, double ball_radius);

}  // namespace omd

#endif  // OMD_OFFLINE_H_
