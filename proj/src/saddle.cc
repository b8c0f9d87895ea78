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

#include "omd/saddle.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace omd {
namespace {

// Per-learner accumulators for the regret-bound right-hand side.
struct BoundTerms {
  double variance = 0.0;
  double negative = 0.0;

  void Add(const MirrorMap& map, const OmdStep& s) {
    const double now = map.Norm(Subtract(s.secondary, s.played));
    const double prev = map.Norm(Subtract(s.previous_secondary, s.played));
    variance += map.DualNorm(Subtract(s.gradient, s.prediction)) * now;
    negative += now * now + prev * prev;
  }
  double Rhs(double radius, double eta) const {
    return radius * radius / eta + variance - negative / (2.0 * eta);
  }
};

Vec Negated(Vec v) {
  for (double& x : v) x = -x;
  return v;
}

}  // namespace

double SaddleProblem::H() const {
  return *std::max_element(smoothness.begin(), smoothness.end());
}

double SaddleProblem::gamma() const {
  return *std::min_element(exponents.begin(), exponents.end());
}

double SaddleEta(double radius_f, double radius_x, double smoothness,
                 double gamma, int rounds) {
  const double r2 = radius_f * radius_f + radius_x * radius_x;
  if (!(r2 > 0.0)) throw InvalidInput("radii must be positive");
  if (!(smoothness > 0.0)) throw InvalidInput("H must be positive");
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InvalidInput("gamma must lie in [0, 1]");
  }
  if (rounds < 1) throw InvalidInput("rounds must be >= 1");
  const double t = static_cast<double>(rounds);
  return std::pow(r2, (1.0 - gamma) / 2.0) / (2.0 * smoothness) *
         std::pow(t / 2.0, (gamma - 1.0) / 2.0);
}

SaddleResult SaddleSolve(const SaddleProblem& problem, int rounds) {
  const double eta = SaddleEta(problem.radius_f, problem.radius_x, problem.H(),
                               problem.gamma(), rounds);
  return RunCoupledDynamics(problem, rounds, eta, eta);
}

SaddleResult RunCoupledDynamics(const SaddleProblem& problem, int rounds,
                                double eta_f, double eta_x,
                                const SaddleObserver& observer) {
  if (rounds < 1) throw InvalidInput("rounds must be >= 1");
  const MirrorMap& map_f = problem.map_f;
  const MirrorMap& map_x = problem.map_x;
  OmdState learner_f = OmdState::Initial(map_f);
  OmdState learner_x = OmdState::Initial(map_x);

  SaddleResult result;
  Vec sum_f(map_f.dimension(), 0.0);
  Vec sum_x(map_x.dimension(), 0.0);
  BoundTerms terms_f;
  BoundTerms terms_x;
  const bool exact = static_cast<bool>(problem.gap_oracle);
  result.trace.reserve(static_cast<std::size_t>(rounds));

  for (int t = 1; t <= rounds; ++t) {
    const Vec& g = learner_f.secondary;
    const Vec& y = learner_x.secondary;
    const Vec predict_f = problem.grad_f(g, y);
    const Vec predict_x = Negated(problem.grad_x(g, y));

    Vec f = OmdPlay(learner_f, map_f, predict_f, eta_f);
    Vec x = OmdPlay(learner_x, map_x, predict_x, eta_x);
    const Vec grad_f = problem.grad_f(f, x);
    const Vec grad_x = Negated(problem.grad_x(f, x));

    auto [step_f, next_f] = OmdObserve(std::move(learner_f), map_f,
                                       std::move(f), predict_f, grad_f, eta_f);
    auto [step_x, next_x] = OmdObserve(std::move(learner_x), map_x,
                                       std::move(x), predict_x, grad_x, eta_x);
    learner_f = std::move(next_f);
    learner_x = std::move(next_x);

    for (std::size_t i = 0; i < sum_f.size(); ++i) sum_f[i] += step_f.played[i];
    for (std::size_t i = 0; i < sum_x.size(); ++i) sum_x[i] += step_x.played[i];
    terms_f.Add(map_f, step_f);
    terms_x.Add(map_x, step_x);

    SaddleTraceRow row;
    row.t = t;
    row.eta_f = eta_f;
    row.eta_x = eta_x;
    row.cert_rhs = terms_f.Rhs(problem.radius_f, eta_f) +
                   terms_x.Rhs(problem.radius_x, eta_x);
    if (exact) {
      const double inv = 1.0 / static_cast<double>(t);
      row.gap = problem.gap_oracle(Scale(sum_f, inv), Scale(sum_x, inv));
      row.cert_lhs = row.gap * t;
    } else {
      row.gap = row.cert_rhs / t;
      row.cert_lhs = std::numeric_limits<double>::quiet_NaN();
    }
    result.trace.push_back(row);
    if (observer) observer(t, step_f, step_x);
  }

  const double inv = 1.0 / static_cast<double>(rounds);
  result.f_bar = Scale(sum_f, inv);
  result.x_bar = Scale(sum_x, inv);
  result.regret_bound = result.trace.back().cert_rhs * inv;
  result.gap_is_exact = exact;
  result.gap = result.trace.back().gap;
  return result;
}

double BilinearGap(const Matrix& a, std::span<const double> f,
                   std::span<const double> x) {
  if (f.size() != a.rows() || x.size() != a.cols()) {
    throw InvalidInput("bilinear gap: dimension mismatch");
  }
  return MaxEntry(a.ApplyTransposed(f)) - MinEntry(a.Apply(x));
}

SaddleProblem BilinearSaddle(const Matrix& a, double smoothness) {
  if (a.rows() == 0 || a.cols() == 0) throw InvalidInput("empty matrix");
  if (NormInf(a.data()) > smoothness) {
    throw InvalidInput("smoothness must bound every matrix entry");
  }
  SaddleProblem p{
      .map_f = MirrorMap::NegativeEntropy(a.rows()),
      .map_x = MirrorMap::NegativeEntropy(a.cols()),
  };
  p.grad_f = [a](std::span<const double>, std::span<const double> x) {
    return a.Apply(x);
  };
  p.grad_x = [a](std::span<const double> f, std::span<const double>) {
    return a.ApplyTransposed(f);
  };
  p.value = [a](std::span<const double> f, std::span<const double> x) {
    return Dot(f, a.Apply(x));
  };
  p.gap_oracle = [a](std::span<const double> f, std::span<const double> x) {
    return BilinearGap(a, f, x);
  };
  p.smoothness = {smoothness, smoothness, smoothness, smoothness};
  p.exponents = {1.0, 1.0, 1.0, 1.0};
  p.radius_f = std::sqrt(std::log(static_cast<double>(a.rows())));
  p.radius_x = std::sqrt(std::log(static_cast<double>(a.cols())));
  return p;
}

}  // namespace omd
