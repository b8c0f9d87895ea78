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

#include "omd/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "omd/saddle.h"

namespace omd {
namespace {

constexpr double kEtaCap = 1.0 / 11.0;
constexpr double kObservationSlack = 1e-9;

double L1Distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double InfDistance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s = std::max(s, std::abs(a[i] - b[i]));
  }
  return s;
}

void CheckObservation(std::span<const double> obs, std::size_t n) {
  if (obs.size() != n) throw InvalidInput("observation has wrong length");
  for (double v : obs) {
    if (!std::isfinite(v) || std::abs(v) > 1.0 + kObservationSlack) {
      throw InvalidInput("observation entries must lie in [-1, 1]");
    }
  }
}

Vec NegatedColumnLoss(const Matrix& a, std::span<const double> f) {
  Vec loss = a.ApplyTransposed(f);
  for (double& v : loss) v = -v;
  return loss;
}

}  // namespace

PayoffMatrix::PayoffMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.cols() == 0) {
    throw InvalidInput("payoff matrix must be non-empty");
  }
  for (std::size_t i = 0; i < entries_.rows(); ++i) {
    for (std::size_t j = 0; j < entries_.cols(); ++j) {
      const double v = entries_(i, j);
      if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
        throw InvalidInput("payoff entry (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") outside [-1, 1]");
      }
    }
  }
}

double FullInfoEta(double sum_prev, double sum_prev2, std::size_t n,
                   int horizon) {
  const double denom = std::sqrt(sum_prev) + std::sqrt(sum_prev2);
  if (!(denom > 0.0)) return kEtaCap;
  const double num = std::log(static_cast<double>(n) * horizon);
  return std::min(num / denom, kEtaCap);
}

FullInfoPlayer MakeFullInfoPlayer(std::size_t n, int horizon,
                                  std::span<const double> initial_observation,
                                  bool mixing) {
  if (n == 0) throw InvalidInput("player needs at least one action");
  if (horizon < 1) throw InvalidInput("horizon must be positive");
  CheckObservation(initial_observation, n);
  FullInfoPlayer p;
  p.n = n;
  p.horizon = horizon;
  p.beta = mixing ? 1.0 / (static_cast<double>(horizon) * horizon) : 0.0;
  p.g_prime = SimplexPoint::Uniform(n);
  p.g = p.g_prime;
  p.last_observation.assign(initial_observation.begin(),
                            initial_observation.end());
  p.eta_play = FullInfoEta(0.0, 0.0, n, horizon);
  p.play = p.g_prime.Tilted(initial_observation, p.eta_play);
  return p;
}

FullInfoPlayer FullInfoStep(FullInfoPlayer player,
                            std::span<const double> observation) {
  CheckObservation(observation, player.n);
  const double diff = InfDistance(observation, player.last_observation);
  const double prev_sum = player.history_sum;
  player.sq_diff_history.push_back(diff * diff);
  player.history_sum += diff * diff;

  player.g = player.g_prime.Tilted(observation, player.eta_play);
  player.g_prime = player.g.Mixed(player.beta);
  player.eta_play =
      FullInfoEta(player.history_sum, prev_sum, player.n, player.horizon);
  player.play = player.g_prime.Tilted(observation, player.eta_play);
  player.last_observation.assign(observation.begin(), observation.end());
  ++player.round;
  return player;
}

bool CertificateValue::Holds(double tol) const {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return lhs <= rhs + tol * scale;
}

FullInfoCertificate::FullInfoCertificate(std::size_t n, int horizon)
    : n_(n),
      log_radius_(std::log(static_cast<double>(n) * horizon * horizon)),
      cumulative_loss_(n, 0.0) {}

void FullInfoCertificate::Add(const PlayerRoundRecord& r) {
  if (r.observation.size() != n_ || r.play.size() != n_) {
    throw InvalidInput("certificate record has wrong dimension");
  }
  cumulative_loss_ = Axpy(cumulative_loss_, 1.0, r.observation);
  played_loss_ += Dot(r.play, r.observation);
  if (rounds_ == 0) first_eta_ = r.eta;
  last_eta_ = r.eta;
  variance_ += InfDistance(r.observation, r.previous_observation) *
               L1Distance(r.g, r.play);
  const double a = L1Distance(r.g_prime, r.play);
  const double b = L1Distance(r.g_prime_prev, r.play);
  negative_ += 0.5 * (a * a + b * b) / r.eta;
  ++rounds_;
}

CertificateValue FullInfoCertificate::Value() const {
  CertificateValue v;
  if (rounds_ == 0) {
    v.rhs = 1.0;
    return v;
  }
  v.lhs = played_loss_ - MinEntry(cumulative_loss_);
  v.rhs = (1.0 / first_eta_ + 1.0 / last_eta_) * log_radius_ + variance_ -
          negative_ + 1.0;
  return v;
}

CertificateValue FullInfoRegretCertificate(
    std::span<const PlayerRoundRecord> records, std::size_t n, int horizon) {
  FullInfoCertificate cert(n, horizon);
  for (const auto& r : records) cert.Add(r);
  return cert.Value();
}

double FullInfoGapBound(std::size_t n, std::size_t m, int horizon) {
  const double t = horizon;
  const double log_term =
      std::log(static_cast<double>(n) * static_cast<double>(m) * t * t * t * t);
  return (6.0 + 22.0 * log_term + 40.0 / t) / t;
}

namespace {

class FixedOpponent : public Opponent {
 public:
  explicit FixedOpponent(Vec x) : x_(std::move(x)) {}
  Vec Play(int) override { return x_; }
  void Observe(std::span<const double>) override {}

 private:
  Vec x_;
};

class RandomOpponent : public Opponent {
 public:
  RandomOpponent(std::size_t m, std::uint64_t seed) : m_(m) {
    std::seed_seq seq{seed, std::uint64_t{0x6f7070}};
    rng_.seed(seq);
  }
  Vec Play(int) override {
    std::exponential_distribution<double> draw(1.0);
    Vec x(m_);
    for (double& v : x) v = draw(rng_);
    const double s = Sum(x);
    for (double& v : x) v /= s;
    return x;
  }
  void Observe(std::span<const double>) override {}

 private:
  std::size_t m_;
  std::mt19937_64 rng_;
};

class MirrorDescentOpponent : public Opponent {
 public:
  MirrorDescentOpponent(std::size_t m, double eta)
      : point_(SimplexPoint::Uniform(m)), eta_(eta) {}
  Vec Play(int) override { return point_.weights(); }
  void Observe(std::span<const double> payoffs) override {
    Vec loss(payoffs.begin(), payoffs.end());
    for (double& v : loss) v = -v;
    point_ = point_.Tilted(loss, eta_);
  }

 private:
  SimplexPoint point_;
  double eta_;
};

// Plays the prescribed column dynamics through the opponent interface.
class DynamicsOpponent : public Opponent {
 public:
  DynamicsOpponent(const PayoffMatrix& a, int horizon, bool mixing)
      : player_(MakeFullInfoPlayer(
            a.cols(),
            horizon,
            NegatedColumnLoss(a.entries(), Uniform(a.rows())),
            mixing)),
        certificate_(a.cols(), horizon) {}

  Vec Play(int) override { return player_.play.weights(); }
  void Observe(std::span<const double> payoffs) override {
    Vec loss(payoffs.begin(), payoffs.end());
    for (double& v : loss) v = -v;
    PlayerRoundRecord r;
    r.play = player_.play.weights();
    r.g_prime_prev = player_.g_prime.weights();
    r.previous_observation = player_.last_observation;
    r.eta = player_.eta_play;
    player_ = FullInfoStep(std::move(player_), loss);
    r.g = player_.g.weights();
    r.g_prime = player_.g_prime.weights();
    r.observation = std::move(loss);
    certificate_.Add(r);
  }
  const FullInfoPlayer& player() const { return player_; }
  CertificateValue Certificate() const { return certificate_.Value(); }

 private:
  FullInfoPlayer player_;
  FullInfoCertificate certificate_;
};

MatchResult RunRowPlayer(const PayoffMatrix& a, int horizon,
                         Opponent& opponent, DynamicsOpponent* dynamics,
                         const MatchOptions& options) {
  if (horizon < 1) throw InvalidInput("horizon must be positive");
  const Matrix& m = a.entries();
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();

  FullInfoPlayer row =
      MakeFullInfoPlayer(n, horizon, m.Apply(Uniform(k)), options.mixing);
  FullInfoCertificate row_cert(n, horizon);

  MatchResult result;
  result.trace.reserve(horizon);
  Vec f_sum(n, 0.0);
  Vec x_sum(k, 0.0);
  Vec f_bar(n), x_bar(k);

  for (int t = 1; t <= horizon; ++t) {
    Vec f = row.play.weights();
    Vec x = opponent.Play(t);
    if (x.size() != k) throw InvalidInput("opponent play has wrong length");
    const double eta_row = row.eta_play;
    const double eta_col =
        dynamics != nullptr ? dynamics->player().eta_play
                            : std::numeric_limits<double>::quiet_NaN();

    Vec row_obs = m.Apply(x);
    Vec col_payoff = m.ApplyTransposed(f);

    PlayerRoundRecord r;
    r.play = f;
    r.g_prime_prev = row.g_prime.weights();
    r.previous_observation = row.last_observation;
    r.eta = eta_row;
    row = FullInfoStep(std::move(row), row_obs);
    r.g = row.g.weights();
    r.g_prime = row.g_prime.weights();
    r.observation = row_obs;
    row_cert.Add(r);
    opponent.Observe(col_payoff);

    f_sum = Axpy(f_sum, 1.0, f);
    x_sum = Axpy(x_sum, 1.0, x);
    for (std::size_t i = 0; i < n; ++i) f_bar[i] = f_sum[i] / t;
    for (std::size_t j = 0; j < k; ++j) x_bar[j] = x_sum[j] / t;

    GameTraceRow row_out;
    row_out.t = t;
    row_out.eta_row = eta_row;
    row_out.eta_col = eta_col;
    row_out.gap = BilinearGap(m, f_bar, x_bar);
    const CertificateValue rc = row_cert.Value();
    row_out.cert_lhs_row = rc.lhs;
    row_out.cert_rhs_row = rc.rhs;
    if (!rc.Holds()) ++result.certificate_failures;
    if (dynamics != nullptr) {
      const CertificateValue cc = dynamics->Certificate();
      row_out.cert_lhs_col = cc.lhs;
      row_out.cert_rhs_col = cc.rhs;
      if (!cc.Holds()) ++result.certificate_failures;
    } else {
      row_out.cert_lhs_col = std::numeric_limits<double>::quiet_NaN();
      row_out.cert_rhs_col = std::numeric_limits<double>::quiet_NaN();
    }
    ++result.certificate_checks;
    result.trace.push_back(row_out);

    if (options.record_plays) {
      result.row_plays.push_back(std::move(f));
      result.col_plays.push_back(std::move(x));
      result.row_records.push_back(std::move(r));
    }
  }

  result.f_bar = std::move(f_bar);
  result.x_bar = std::move(x_bar);
  result.gap = result.trace.back().gap;
  result.row_certificate = row_cert.Value();
  if (dynamics != nullptr) {
    result.col_certificate = dynamics->Certificate();
  } else {
    result.col_certificate.lhs = std::numeric_limits<double>::quiet_NaN();
    result.col_certificate.rhs = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

}  // namespace

std::unique_ptr<Opponent> MakeFixedOpponent(Vec x) {
  if (x.empty() || !AllFinite(x)) throw InvalidInput("invalid fixed play");
  return std::make_unique<FixedOpponent>(std::move(x));
}

std::unique_ptr<Opponent> MakeRandomOpponent(std::size_t m,
                                             std::uint64_t seed) {
  if (m == 0) throw InvalidInput("opponent needs at least one action");
  return std::make_unique<RandomOpponent>(m, seed);
}

std::unique_ptr<Opponent> MakeMirrorDescentOpponent(std::size_t m,
                                                    double eta) {
  if (m == 0) throw InvalidInput("opponent needs at least one action");
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw InvalidInput("step size must be positive");
  }
  return std::make_unique<MirrorDescentOpponent>(m, eta);
}

MatchResult RunFullInfoMatch(const PayoffMatrix& a, int horizon,
                             const MatchOptions& options) {
  if (horizon < 1) throw InvalidInput("horizon must be positive");
  DynamicsOpponent column(a, horizon, options.mixing);
  return RunRowPlayer(a, horizon, column, &column, options);
}

MatchResult RunFullInfoAgainst(const PayoffMatrix& a, int horizon,
                               Opponent& opponent,
                               const MatchOptions& options) {
  return RunRowPlayer(a, horizon, opponent, nullptr, options);
}

}  // namespace omd
