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

#ifndef OMD_BANDIT_H_
#define OMD_BANDIT_H_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "omd/game.h"
#include "omd/linalg.h"
#include "omd/mirror_map.h"

namespace omd {

// Orthonormal basis of {v : sum(v) = 0} in R^n:
//   u_k = (1, ..., 1, -k, 0, ..., 0) / sqrt(k (k + 1)),  k = 1..n-1.
std::vector<Vec> TangentBasis(std::size_t n);

// n / (2 delta) (r_plus - r_minus) u
Vec BanditEstimate(double r_plus, double r_minus, double delta,
                   std::span<const double> direction, std::size_t n);

// min{ sqrt(log(nT)) (sqrt(S_{t-1}) - sqrt(S_{t-2})) / h_{t-1},
//      1 / (28 m sqrt(log(mT))) }
// where h is the history of squared estimate differences, n the player's
// dimension and m the opponent's. A vanishing ratio 0/0 yields the cap.
double BanditEta(std::span<const double> history, std::size_t n,
                 std::size_t m, int horizon);

// Largest delta that keeps g'_t +- delta u feasible for both players of an
// n x m game: min over sides of (beta / k) / max ||u||_inf.
double MaxBanditDelta(std::size_t n, std::size_t m, int horizon);

// Returns the scalar payoff of a perturbed play.
using PayoffOracle = std::function<double(std::span<const double>)>;

struct BanditPlayer {
  std::size_t n = 0;
  std::size_t opponent_dim = 0;
  int horizon = 0;
  double beta = 0.0;
  double delta = 0.0;
  std::vector<Vec> basis;
  SimplexPoint g_prime = SimplexPoint::Uniform(1);  // g'_t
  SimplexPoint g = SimplexPoint::Uniform(1);        // g_t
  SimplexPoint play = SimplexPoint::Uniform(1);     // f_{t+1}
  Vec previous_bar_estimate;  // a-bar_{t}; zero before the first round
  std::size_t previous_index = 0;  // i_t
  Vec sq_diff_history;
  double eta_play = 0.0;
  int round = 0;
  std::mt19937_64 rng;
};

// f_1 = g'_0 = uniform, a-bar_0 = 0. The first exploration direction is
// drawn from the player's own stream.
BanditPlayer MakeBanditPlayer(std::size_t n, std::size_t opponent_dim,
                              int horizon, double delta, std::uint64_t seed,
                              std::uint64_t stream);

// One round: query the oracle at f_t +- delta u_{i_{t-1}} and
// g'_{t-1} +- delta u_{i_t}, then update
//   g_t ~ g'_{t-1} exp(-eta_t a-hat_t),  g'_t = (1 - beta) g_t + beta / n,
//   f_{t+1} ~ g'_t exp(-eta_{t+1} a-bar_t).
BanditPlayer BanditStep(BanditPlayer player, const PayoffOracle& payoff);

struct BanditOptions {
  std::uint64_t seed = 0;
  double delta = 1e-6;  // clamped to MaxBanditDelta
  bool explicit_delta = false;  // reject instead of clamping when too large
  bool record_plays = false;
};

struct BanditResult {
  std::vector<GameTraceRow> trace;  // cert columns: eta_t and its cap
  Vec f_bar;
  Vec x_bar;
  double gap = 0.0;
  double delta = 0.0;
  std::vector<Vec> row_plays;
  std::vector<Vec> col_plays;
};

BanditResult RunBanditMatch(const PayoffMatrix& a, int horizon,
                            const BanditOptions& options = {});

}  // namespace omd

#endif  // OMD_BANDIT_H_
