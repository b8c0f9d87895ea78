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

#include "omd/offline.h"

#include <cmath>

#include "omd/projection.h"

namespace omd {
namespace {

// a^b with 0^0 = 1 at the exponent endpoints.
double PowOrOne(double base, double exponent) {
  if (exponent == 0.0) return 1.0;
  return std::pow(base, exponent);
}

void CheckRounds(int rounds) {
  if (rounds < 1) throw InvalidInput("rounds must be >= 1");
}

OfflineResult RunPredictedGradient(const SmoothProblem& problem, int rounds,
                                   double eta) {
  CheckRounds(rounds);
  OfflineResult result;
  result.eta = eta;
  result.trajectory.reserve(static_cast<std::size_t>(rounds));
  result.average.assign(problem.map.dimension(), 0.0);
  OmdState state = OmdState::Initial(problem.map);
  for (int t = 1; t <= rounds; ++t) {
    const Vec prediction = problem.gradient(state.secondary);
    auto [step, next] =
        OmdRound(std::move(state), problem.map, prediction, problem.gradient,
                 eta);
    state = std::move(next);
    for (std::size_t i = 0; i < result.average.size(); ++i) {
      result.average[i] += step.played[i];
    }
    result.trajectory.push_back(std::move(step));
  }
  for (double& v : result.average) v /= static_cast<double>(rounds);
  return result;
}

}  // namespace

OfflineResult MirrorProx(const SmoothProblem& problem, int rounds) {
  if (problem.holder_exponent != 1.0) {
    throw InvalidInput("mirror prox requires a smooth (alpha = 1) problem");
  }
  if (!(problem.smoothness > 0.0)) throw InvalidInput("H must be positive");
  return RunPredictedGradient(problem, rounds, 1.0 / problem.smoothness);
}

double HolderEta(double radius, double smoothness, double alpha, int rounds) {
  if (!(radius > 0.0) || !(smoothness > 0.0)) {
    throw InvalidInput("R and H must be positive");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidInput("alpha must lie in [0, 1]");
  }
  CheckRounds(rounds);
  const double t = static_cast<double>(rounds);
  return PowOrOne(radius, 1.0 - alpha) / smoothness *
         PowOrOne(1.0 + alpha, -(1.0 + alpha) / 2.0) *
         PowOrOne(1.0 - alpha, -(1.0 - alpha) / 2.0) *
         PowOrOne(t, -(1.0 - alpha) / 2.0);
}

double HolderBound(double radius, double smoothness, double alpha,
                   int rounds) {
  CheckRounds(rounds);
  return 8.0 * smoothness * std::pow(radius, 1.0 + alpha) /
         std::pow(static_cast<double>(rounds), (1.0 + alpha) / 2.0);
}

OfflineResult HolderOptimize(const SmoothProblem& problem, int rounds) {
  const double eta = HolderEta(problem.radius, problem.smoothness,
                               problem.holder_exponent, rounds);
  return RunPredictedGradient(problem, rounds, eta);
}

bool CheckHolderSmoothness(const SmoothProblem& problem,
                           std::span<const Vec> points) {
  const double a = problem.holder_exponent;
  for (const Vec& f : points) {
    const Vec gf = problem.gradient(f);
    for (const Vec& g : points) {
      const double lhs =
          problem.map.DualNorm(Subtract(gf, problem.gradient(g)));
      const double dist = problem.map.Norm(Subtract(f, g));
      const double rhs =
          (1.0 + 1e-6) * problem.smoothness * PowOrOne(dist, a);
      if (lhs > rhs) return false;
    }
  }
  return true;
}

PowerDistanceProblem MakePowerDistanceProblem(std::span<const double> target,
                                              double alpha,
                                              double ball_radius) {
  if (target.empty()) throw InvalidInput("empty target");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidInput("alpha must lie in [0, 1]");
  }
  if (!(ball_radius > 0.0)) throw InvalidInput("radius must be positive");
  const std::size_t n = target.size();
  const Vec p(target.begin(), target.end());
  const double target_norm = NormL2(p);

  PowerDistanceProblem out{
      .problem = {.map = MirrorMap::Euclidean(n, BallSet{ball_radius})}};
  if (target_norm <= ball_radius) {
    out.minimizer = p;
    out.optimum = 0.0;
  } else if (alpha == 1.0) {
    out.minimizer = ProjectBall(p, ball_radius);
    const double gap = target_norm - ball_radius;
    out.optimum = 0.5 * gap * gap;
  } else {
    throw InvalidInput(
        "no closed-form optimum for a target outside the ball unless alpha = 1");
  }

  out.problem.gradient = [p, alpha](std::span<const double> f) {
    Vec g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double d = f[i] - p[i];
      const double mag = alpha == 0.0 ? 1.0 : std::pow(std::abs(d), alpha);
      g[i] = d > 0.0 ? mag : (d < 0.0 ? -mag : 0.0);
    }
    return g;
  };
  out.problem.value = [p, alpha](std::span<const double> f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      s += std::pow(std::abs(f[i] - p[i]), 1.0 + alpha);
    }
    return s / (1.0 + alpha);
  };
  out.problem.smoothness =
      std::pow(2.0, 1.0 - alpha) *
      std::pow(static_cast<double>(n), (1.0 - alpha) / 2.0);
  out.problem.holder_exponent = alpha;
  out.problem.radius = ball_radius / std::sqrt(2.0);
  return out;
}

}  // namespace omd
