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

#include "omd/bandit.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "omd/saddle.h"

namespace omd {
namespace {

double BasisInfNorm(std::size_t n) {
  // u_1 = (1, -1, 0, ...) / sqrt(2) has the largest entry.
  double best = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    best = std::max(best, kk / std::sqrt(kk * (kk + 1.0)));
  }
  return std::max(best, 1.0 / std::sqrt(2.0));
}

double BanditCap(std::size_t m, int horizon) {
  const double mt = static_cast<double>(m) * horizon;
  return 1.0 / (28.0 * static_cast<double>(m) * std::sqrt(std::log(mt)));
}

Vec Perturbed(std::span<const double> base, std::span<const double> u,
              double scale) {
  return Axpy(base, scale, u);
}

std::size_t DrawIndex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> draw(0, n - 2);
  return draw(rng);
}

}  // namespace

std::vector<Vec> TangentBasis(std::size_t n) {
  if (n < 2) throw InvalidInput("tangent basis needs n >= 2");
  std::vector<Vec> basis;
  basis.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double scale = 1.0 / std::sqrt(kk * (kk + 1.0));
    Vec u(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) u[i] = scale;
    u[k] = -kk * scale;
    basis.push_back(std::move(u));
  }
  return basis;
}

Vec BanditEstimate(double r_plus, double r_minus, double delta,
                   std::span<const double> direction, std::size_t n) {
  if (!(delta > 0.0)) throw InvalidInput("delta must be positive");
  const double c = static_cast<double>(n) / (2.0 * delta) * (r_plus - r_minus);
  return Scale(direction, c);
}

double BanditEta(std::span<const double> history, std::size_t n,
                 std::size_t m, int horizon) {
  const double cap = BanditCap(m, horizon);
  const std::size_t k = history.size();
  if (k == 0) return cap;
  double s_prev = 0.0;
  for (std::size_t i = 0; i + 1 < k; ++i) s_prev += history[i];
  const double last = history[k - 1];
  const double s = s_prev + last;
  const double num = std::sqrt(std::log(static_cast<double>(n) * horizon)) *
                     (std::sqrt(s) - std::sqrt(s_prev));
  if (!(last > 0.0)) return cap;
  return std::min(num / last, cap);
}

double MaxBanditDelta(std::size_t n, std::size_t m, int horizon) {
  const double beta = 1.0 / (static_cast<double>(horizon) * horizon);
  const double row = beta / static_cast<double>(n) / BasisInfNorm(n);
  const double col = beta / static_cast<double>(m) / BasisInfNorm(m);
  return std::min(row, col);
}

BanditPlayer MakeBanditPlayer(std::size_t n, std::size_t opponent_dim,
                              int horizon, double delta, std::uint64_t seed,
                              std::uint64_t stream) {
  if (n < 2 || opponent_dim < 2) {
    throw InvalidInput("bandit players need at least two actions");
  }
  if (horizon < 2) throw InvalidInput("horizon must be at least 2");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidInput("delta must be positive");
  }
  BanditPlayer p;
  p.n = n;
  p.opponent_dim = opponent_dim;
  p.horizon = horizon;
  p.beta = 1.0 / (static_cast<double>(horizon) * horizon);
  if (delta > p.beta / static_cast<double>(n) / BasisInfNorm(n)) {
    throw InvalidInput("delta too large for the mixing floor");
  }
  p.delta = delta;
  p.basis = TangentBasis(n);
  p.g_prime = SimplexPoint::Uniform(n);
  p.g = p.g_prime;
  p.play = p.g_prime;
  p.previous_bar_estimate.assign(n, 0.0);
  std::seed_seq seq{seed, stream};
  p.rng.seed(seq);
  p.previous_index = DrawIndex(p.rng, n);
  p.eta_play = BanditEta({}, n, opponent_dim, horizon);
  return p;
}

BanditPlayer BanditStep(BanditPlayer player, const PayoffOracle& payoff) {
  const Vec& f = player.play.weights();
  const std::size_t index = DrawIndex(player.rng, player.n);
  const Vec& u_prev = player.basis[player.previous_index];
  const Vec& u_next = player.basis[index];
  const double d = player.delta;

  const double r_plus = payoff(Perturbed(f, u_prev, d));
  const double r_minus = payoff(Perturbed(f, u_prev, -d));
  const double rb_plus = payoff(Perturbed(f, u_next, d));
  const double rb_minus = payoff(Perturbed(f, u_next, -d));

  const Vec a_hat = BanditEstimate(r_plus, r_minus, d, u_prev, player.n);
  Vec a_bar = BanditEstimate(rb_plus, rb_minus, d, u_next, player.n);
  const double diff = NormInf(Subtract(a_hat, player.previous_bar_estimate));
  player.sq_diff_history.push_back(diff * diff);

  player.g = player.g_prime.Tilted(a_hat, player.eta_play);
  player.g_prime = player.g.Mixed(player.beta);
  player.eta_play = BanditEta(player.sq_diff_history, player.n,
                              player.opponent_dim, player.horizon);
  player.play = player.g_prime.Tilted(a_bar, player.eta_play);
  player.previous_bar_estimate = std::move(a_bar);
  player.previous_index = index;
  ++player.round;
  return player;
}

BanditResult RunBanditMatch(const PayoffMatrix& a, int horizon,
                            const BanditOptions& options) {
  if (horizon < 2) throw InvalidInput("horizon must be at least 2");
  const Matrix& m = a.entries();
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  const double limit = MaxBanditDelta(n, k, horizon);
  double delta = options.delta;
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidInput("delta must be positive");
  }
  if (delta > limit) {
    if (options.explicit_delta) {
      throw InvalidInput("delta too large for the mixing floor");
    }
    delta = limit;
  }

  BanditPlayer row = MakeBanditPlayer(n, k, horizon, delta, options.seed, 1);
  BanditPlayer col = MakeBanditPlayer(k, n, horizon, delta, options.seed, 2);
  const double row_cap = BanditEta({}, n, k, horizon);
  const double col_cap = BanditEta({}, k, n, horizon);

  BanditResult result;
  result.delta = delta;
  result.trace.reserve(horizon);
  Vec f_sum(n, 0.0), x_sum(k, 0.0), f_bar(n), x_bar(k);

  for (int t = 1; t <= horizon; ++t) {
    const Vec f = row.play.weights();
    const Vec x = col.play.weights();
    const Vec ax = m.Apply(x);
    const Vec fa = m.ApplyTransposed(f);
    const double eta_row = row.eta_play;
    const double eta_col = col.eta_play;

    row = BanditStep(std::move(row), [&ax](std::span<const double> p) {
      return Dot(p, ax);
    });
    col = BanditStep(std::move(col), [&fa](std::span<const double> q) {
      return -Dot(fa, q);
    });

    f_sum = Axpy(f_sum, 1.0, f);
    x_sum = Axpy(x_sum, 1.0, x);
    for (std::size_t i = 0; i < n; ++i) f_bar[i] = f_sum[i] / t;
    for (std::size_t j = 0; j < k; ++j) x_bar[j] = x_sum[j] / t;

    GameTraceRow r;
    r.t = t;
    r.eta_row = eta_row;
    r.eta_col = eta_col;
    r.gap = BilinearGap(m, f_bar, x_bar);
    r.cert_lhs_row = eta_row;
    r.cert_rhs_row = row_cap;
    r.cert_lhs_col = eta_col;
    r.cert_rhs_col = col_cap;
    result.trace.push_back(r);
    if (options.record_plays) {
      result.row_plays.push_back(f);
      result.col_plays.push_back(x);
    }
  }
  result.f_bar = std::move(f_bar);
  result.x_bar = std::move(x_bar);
  result.gap = result.trace.back().gap;
  return result;
}

}  // namespace omd
