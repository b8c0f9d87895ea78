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

#include "omd/optimistic.h"

#include <algorithm>
#include <cmath>

namespace omd {

OmdState OmdState::Initial(const MirrorMap& map, double r_max) {
  OmdState state;
  state.secondary = map.InitialPoint();
  state.r_max = r_max;
  return state;
}

Vec OmdPlay(const OmdState& state, const MirrorMap& map,
            std::span<const double> prediction, double eta) {
  if (!AllFinite(prediction)) throw InvalidInput("non-finite prediction");
  return ProxStep(map, state.secondary, prediction, eta);
}

OmdRoundResult OmdObserve(OmdState state, const MirrorMap& map, Vec played,
                          std::span<const double> prediction,
                          std::span<const double> gradient, double eta) {
  if (gradient.size() != map.dimension()) {
    throw InvalidInput("gradient has wrong dimension");
  }
  OmdStep step;
  step.previous_secondary = std::move(state.secondary);
  step.prediction.assign(prediction.begin(), prediction.end());
  step.gradient.assign(gradient.begin(), gradient.end());
  step.eta = eta;
  step.played = std::move(played);
  step.secondary = ProxStep(map, step.previous_secondary, gradient, eta);

  const double miss = map.DualNorm(Subtract(step.gradient, step.prediction));
  state.sq_diff_history.push_back(miss * miss);
  state.eta_sequence.push_back(eta);
  state.primary = step.played;
  state.secondary = step.secondary;
  ++state.round;
  return {std::move(step), std::move(state)};
}

OmdRoundResult OmdRound(OmdState state, const MirrorMap& map,
                        std::span<const double> prediction,
                        const GradientOracle& oracle, double eta) {
  Vec played = OmdPlay(state, map, prediction, eta);
  const Vec gradient = oracle(played);
  return OmdObserve(std::move(state), map, std::move(played), prediction,
                    gradient, eta);
}

double AdaptiveEta(std::span<const double> sq_diff_history, double r_max) {
  if (!(r_max > 0.0)) throw InvalidInput("R_max must be positive");
  double total = 0.0;
  for (double h : sq_diff_history) {
    if (!(h >= 0.0) || !std::isfinite(h)) {
      throw InvalidInput("history entries must be finite and nonnegative");
    }
    total += h;
  }
  const double all_but_last =
      sq_diff_history.empty() ? 0.0 : total - sq_diff_history.back();
  const double denom = std::sqrt(total) + std::sqrt(std::max(all_but_last, 0.0));
  if (denom == 0.0) return r_max;
  return r_max * std::min(1.0 / denom, 1.0);
}

bool RegretCertificate::Holds(double tol) const {
  const double scale = std::max({1.0, std::abs(lhs), divergence_term,
                                 variance_term, negative_term});
  return lhs <= rhs() + tol * scale;
}

RegretCertificate ComputeRegretCertificate(std::span<const OmdStep> trajectory,
                                           const MirrorMap& map, double eta,
                                           std::span<const double> comparator) {
  if (trajectory.empty()) throw InvalidInput("empty trajectory");
  if (!(eta > 0.0)) throw InvalidInput("step size must be positive");
  map.CheckPoint(comparator);
  RegretCertificate cert;
  cert.divergence_term =
      Bregman(map, comparator, trajectory.front().previous_secondary) / eta;
  double negative = 0.0;
  for (const OmdStep& s : trajectory) {
    cert.lhs += Dot(Subtract(s.played, comparator), s.gradient);
    const double gap_now = map.Norm(Subtract(s.secondary, s.played));
    const double gap_prev = map.Norm(Subtract(s.previous_secondary, s.played));
    cert.variance_term +=
        map.DualNorm(Subtract(s.gradient, s.prediction)) * gap_now;
    negative += gap_now * gap_now + gap_prev * gap_prev;
  }
  cert.negative_term = negative / (2.0 * eta);
  return cert;
}

}  // namespace omd
