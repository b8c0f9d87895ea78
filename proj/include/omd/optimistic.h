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

#ifndef OMD_OPTIMISTIC_H_
#define OMD_OPTIMISTIC_H_

#include <functional>
#include <span>

#include "omd/linalg.h"
#include "omd/mirror_map.h"

namespace omd {

using GradientOracle = std::function<Vec(std::span<const double>)>;

// One learner's iterates. `secondary` is g_{t-1} before round t is played.
struct OmdState {
  Vec primary;    // f_t of the last completed round; empty before round 1
  Vec secondary;  // g_t
  int round = 0;  // completed rounds
  Vec sq_diff_history;  // ||grad_i - M_i||_*^2, one entry per round
  double r_max = 0.0;   // caller supplied; only AdaptiveEta reads it
  Vec eta_sequence;

  // g_0 = argmin R; no rounds played.
  static OmdState Initial(const MirrorMap& map, double r_max = 0.0);
};

// Everything one round exposes to certificates.
struct OmdStep {
  Vec played;              // f_t
  Vec secondary;           // g_t
  Vec previous_secondary;  // g_{t-1}
  Vec gradient;            // grad_t, evaluated at f_t
  Vec prediction;          // M_t
  double eta = 0.0;
};

struct OmdRoundResult {
  OmdStep step;
  OmdState state;
};

// f_t = prox(g_{t-1}, M_t), grad_t = oracle(f_t), g_t = prox(g_{t-1}, grad_t).
OmdRoundResult OmdRound(OmdState state, const MirrorMap& map,
                        std::span<const double> prediction,
                        const GradientOracle& oracle, double eta);

// Split form of OmdRound for coupled learners whose gradients depend on both
// plays: OmdPlay yields f_t, OmdObserve completes the round once grad_t is
// known.
Vec OmdPlay(const OmdState& state, const MirrorMap& map,
            std::span<const double> prediction, double eta);
OmdRoundResult OmdObserve(OmdState state, const MirrorMap& map, Vec played,
                          std::span<const double> prediction,
                          std::span<const double> gradient, double eta);

// R_max * min{(sqrt(S_{t-1}) + sqrt(S_{t-2}))^{-1}, 1} where S_{t-1} sums the
// whole history and S_{t-2} drops its last entry.
double AdaptiveEta(std::span<const double> sq_diff_history, double r_max);

// Terms of the fixed-step regret bound, evaluated on a recorded trajectory:
//   lhs = sum <f_t - f*, grad_t>
//   rhs = D(f*, g_0) / eta + sum ||grad_t - M_t||_* ||g_t - f_t||
//         - (1 / 2 eta) sum (||g_t - f_t||^2 + ||g_{t-1} - f_t||^2)
struct RegretCertificate {
  double lhs = 0.0;
  double divergence_term = 0.0;
  double variance_term = 0.0;
  double negative_term = 0.0;

  double rhs() const { return divergence_term + variance_term - negative_term; }
  // lhs <= rhs up to `tol` relative to the size of the terms.
  bool Holds(double tol = 1e-9) const;
};

RegretCertificate ComputeRegretCertificate(std::span<const OmdStep> trajectory,
                                           const MirrorMap& map, double eta,
                                           std::span<const double> comparator);

}  // namespace omd

#endif  // OMD_OPTIMISTIC_H_
