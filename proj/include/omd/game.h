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

#ifndef OMD_GAME_H_
#define OMD_GAME_H_

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "omd/linalg.h"
#include "omd/mirror_map.h"

namespace omd {

// A in [-1, 1]^{n x m}. The row player minimizes f^T A x.
class PayoffMatrix {
 public:
  explicit PayoffMatrix(Matrix entries);

  const Matrix& entries() const { return entries_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }

 private:
  Matrix entries_;
};

// min{ log(nT) / (sqrt(S_{t-1}) + sqrt(S_{t-2})), 1/11 }; 1/11 when the
// denominator vanishes.
double FullInfoEta(double sum_prev, double sum_prev2, std::size_t n,
                   int horizon);

// One player of the full-information dynamics. The column player is the
// same learner fed the loss -(f^T A).
struct FullInfoPlayer {
  std::size_t n = 0;
  int horizon = 0;
  double beta = 0.0;          // 1/T^2, or 0 with mixing disabled
  SimplexPoint g_prime = SimplexPoint::Uniform(1);  // g'_t
  SimplexPoint g = SimplexPoint::Uniform(1);        // g_t
  SimplexPoint play = SimplexPoint::Uniform(1);     // f_{t+1}
  Vec last_observation;       // obs_t; obs_0 before the first round
  Vec sq_diff_history;        // ||obs_i - obs_{i-1}||_inf^2
  double history_sum = 0.0;
  double eta_play = 0.0;      // step size that produced `play`
  int round = 0;              // completed rounds
};

// g'_0 = uniform and f_1 proportional to g'_0 exp(-eta_1 obs_0), where obs_0 is
// the loss implied by the opponent's uniform opening move.
FullInfoPlayer MakeFullInfoPlayer(std::size_t n, int horizon,
                                  std::span<const double> initial_observation,
                                  bool mixing = true);

// Completes round t with loss obs_t:
//   g_t ~ g'_{t-1} exp(-eta_t obs_t),  g'_t = (1 - beta) g_t + beta / n,
//   f_{t+1} ~ g'_t exp(-eta_{t+1} obs_t).
FullInfoPlayer FullInfoStep(FullInfoPlayer player,
                            std::span<const double> observation);

// Everything the per-trajectory regret certificate reads from one round.
struct PlayerRoundRecord {
  Vec play;                  // f_t
  Vec g;                     // g_t
  Vec g_prime;               // g'_t
  Vec g_prime_prev;          // g'_{t-1}
  Vec observation;           // obs_t
  Vec previous_observation;  // obs_{t-1}
  double eta = 0.0;          // eta_t
};

struct CertificateValue {
  double lhs = 0.0;  // max over vertices of sum <f_t - e_i, obs_t>
  double rhs = 0.0;
  bool Holds(double tol = 1e-9) const;
};

// Incremental form of the certificate so every prefix can be checked:
//   rhs = (1/eta_1 + 1/eta_t) log(n T^2)
//         + sum ||obs_s - obs_{s-1}||_inf ||g_s - f_s||_1
//         - 1/2 sum (1/eta_s) (||g'_s - f_s||_1^2 + ||g'_{s-1} - f_s||_1^2) + 1
class FullInfoCertificate {
 public:
  FullInfoCertificate(std::size_t n, int horizon);
  void Add(const PlayerRoundRecord& record);
  CertificateValue Value() const;

 private:
  std::size_t n_;
  double log_radius_;  // log(n T^2)
  Vec cumulative_loss_;
  double played_loss_ = 0.0;
  double first_eta_ = 0.0;
  double last_eta_ = 0.0;
  double variance_ = 0.0;
  double negative_ = 0.0;
  int rounds_ = 0;
};

CertificateValue FullInfoRegretCertificate(
    std::span<const PlayerRoundRecord> records, std::size_t n, int horizon);

// (6 + 22 log(n m T^4) + 40 / T) / T
double FullInfoGapBound(std::size_t n, std::size_t m, int horizon);

struct GameTraceRow {
  int t = 0;
  double eta_row = 0.0;
  double eta_col = 0.0;
  double gap = 0.0;  // gap of the running averages
  double cert_lhs_row = 0.0;
  double cert_rhs_row = 0.0;
  double cert_lhs_col = 0.0;
  double cert_rhs_col = 0.0;
};

struct MatchResult {
  std::vector<GameTraceRow> trace;
  Vec f_bar;
  Vec x_bar;
  double gap = 0.0;
  CertificateValue row_certificate;
  CertificateValue col_certificate;
  int certificate_checks = 0;    // per side, one per round
  int certificate_failures = 0;  // summed over both sides
  // Filled only when MatchOptions::record_plays is set.
  std::vector<Vec> row_plays;
  std::vector<Vec> col_plays;
  std::vector<PlayerRoundRecord> row_records;
};

struct MatchOptions {
  bool mixing = true;
  bool record_plays = false;
};

// Both players follow the prescribed dynamics. Within a round both losses
// are computed from the simultaneous plays before either player updates.
MatchResult RunFullInfoMatch(const PayoffMatrix& a, int horizon,
                             const MatchOptions& options = {});

// A column player that may ignore the prescribed dynamics.
class Opponent {
 public:
  virtual ~Opponent() = default;
  virtual Vec Play(int t) = 0;
  // Payoff vector f_t^T A the opponent sees after round t.
  virtual void Observe(std::span<const double> payoffs) = 0;
};

std::unique_ptr<Opponent> MakeFixedOpponent(Vec x);
std::unique_ptr<Opponent> MakeRandomOpponent(std::size_t m,
                                             std::uint64_t seed);
// Exponential weights maximizing f^T A x with constant step size.
std::unique_ptr<Opponent> MakeMirrorDescentOpponent(std::size_t m, double eta);

// Row player follows the dynamics against an arbitrary opponent. Only the
// row certificate is populated.
MatchResult RunFullInfoAgainst(const PayoffMatrix& a, int horizon,
                               Opponent& opponent,
                               const MatchOptions& options = {});

}  // namespace omd

#endif  // OMD_GAME_H_
