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

#include "omd/mirror_map.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "omd/projection.h"

namespace omd {
namespace {

constexpr double kSimplexSumTolerance = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckDimension(std::span<const double> v, std::size_t n) {
  if (v.size() != n) {
    throw InvalidInput("expected dimension " + std::to_string(n) + ", got " +
                       std::to_string(v.size()));
  }
}

void CheckOnSimplex(std::span<const double> v, bool strictly_positive) {
  double total = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidInput("non-finite coordinate");
    if (x < 0.0) throw InvalidInput("negative coordinate on the simplex");
    if (strictly_positive && x == 0.0) {
      throw InvalidInput("zero coordinate where a positive one is required");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kSimplexSumTolerance) {
    throw InvalidInput("point does not sum to one");
  }
}

// exp(lw - max) / sum, and the matching normalized log weights.
std::pair<Vec, Vec> Normalize(Vec log_weights) {
  double top = -std::numeric_limits<double>::infinity();
  for (double v : log_weights) top = std::max(top, v);
  if (!std::isfinite(top)) throw InvalidInput("log-weights have no mass");
  Vec w(log_weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(log_weights[i] - top);
    total += w[i];
  }
  const double log_total = std::log(total);
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] /= total;
    log_weights[i] = log_weights[i] - top - log_total;
  }
  return {std::move(log_weights), std::move(w)};
}

}  // namespace

MirrorMap::MirrorMap(MapKind kind, std::size_t dimension, FeasibleSet set)
    : kind_(kind), dimension_(dimension), set_(std::move(set)) {
  if (dimension_ == 0) throw InvalidInput("mirror map dimension must be > 0");
}

MirrorMap MirrorMap::NegativeEntropy(std::size_t dimension) {
  return MirrorMap(MapKind::kNegativeEntropy, dimension, SimplexSet{});
}

MirrorMap MirrorMap::Euclidean(std::size_t dimension, FeasibleSet set) {
  if (const auto* ball = std::get_if<BallSet>(&set)) {
    if (!(ball->radius > 0.0)) throw InvalidInput("ball radius must be > 0");
  }
  if (const auto* affine = std::get_if<AffineSet>(&set)) {
    if (affine->constraints.cols() != dimension ||
        affine->rhs.size() != affine->constraints.rows()) {
      throw InvalidInput("affine set does not match dimension");
    }
  }
  return MirrorMap(MapKind::kEuclidean, dimension, std::move(set));
}

double MirrorMap::Norm(std::span<const double> v) const {
  return kind_ == MapKind::kNegativeEntropy ? NormL1(v) : NormL2(v);
}

double MirrorMap::DualNorm(std::span<const double> v) const {
  return kind_ == MapKind::kNegativeEntropy ? NormInf(v) : NormL2(v);
}

Vec MirrorMap::InitialPoint() const {
  if (kind_ == MapKind::kNegativeEntropy) return Uniform(dimension_);
  return Project(Vec(dimension_, 0.0));
}

Vec MirrorMap::Project(std::span<const double> point) const {
  CheckDimension(point, dimension_);
  return std::visit(
      Overloaded{
          [&](const SimplexSet&) { return ProjectSimplex(point); },
          [&](const BallSet& ball) { return ProjectBall(point, ball.radius); },
          [&](const AffineSet& affine) {
            AffineProjection p = ProjectAffine(point, affine.constraints,
                                               affine.rhs, affine.tolerance);
            if (!p.converged) {
              throw ProjectionError("affine projection did not converge",
                                    p.residual);
            }
            return std::move(p.point);
          }},
      set_);
}

void MirrorMap::CheckPoint(std::span<const double> point) const {
  CheckDimension(point, dimension_);
  if (kind_ == MapKind::kNegativeEntropy) {
    CheckOnSimplex(point, /*strictly_positive=*/false);
  } else if (!AllFinite(point)) {
    throw InvalidInput("non-finite coordinate");
  }
}

SimplexPoint SimplexPoint::Uniform(std::size_t n) {
  if (n == 0) throw InvalidInput("empty simplex");
  const double lw = -std::log(static_cast<double>(n));
  return SimplexPoint(Vec(n, lw), omd::Uniform(n));
}

SimplexPoint SimplexPoint::FromWeights(std::span<const double> weights) {
  if (weights.empty()) throw InvalidInput("empty simplex");
  CheckOnSimplex(weights, /*strictly_positive=*/false);
  Vec lw(weights.size());
  for (std::size_t i = 0; i < lw.size(); ++i) lw[i] = std::log(weights[i]);
  auto [log_weights, w] = Normalize(std::move(lw));
  return SimplexPoint(std::move(log_weights), std::move(w));
}

SimplexPoint SimplexPoint::FromLogWeights(std::span<const double> log_weights) {
  if (log_weights.empty()) throw InvalidInput("empty simplex");
  for (double v : log_weights) {
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
      throw InvalidInput("invalid log-weight");
    }
  }
  auto [lw, w] = Normalize(Vec(log_weights.begin(), log_weights.end()));
  return SimplexPoint(std::move(lw), std::move(w));
}

SimplexPoint SimplexPoint::Tilted(std::span<const double> loss,
                                  double eta) const {
  CheckDimension(loss, size());
  if (!AllFinite(loss)) throw InvalidInput("non-finite loss entry");
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw InvalidInput("step size must be positive and finite");
  }
  const double top = MaxEntry(loss);
  Vec lw(size());
  for (std::size_t i = 0; i < lw.size(); ++i) {
    lw[i] = log_weights_[i] - eta * (loss[i] - top);
  }
  auto [log_weights, w] = Normalize(std::move(lw));
  return SimplexPoint(std::move(log_weights), std::move(w));
}

SimplexPoint SimplexPoint::Mixed(double beta) const {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw InvalidInput("mixing weight must lie in [0, 1]");
  }
  if (beta == 0.0) return *this;
  const double floor = beta / static_cast<double>(size());
  Vec w(size());
  Vec lw(size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = (1.0 - beta) * weights_[i] + floor;
    lw[i] = std::log(w[i]);
  }
  return SimplexPoint(std::move(lw), std::move(w));
}

double Bregman(const MirrorMap& map, std::span<const double> f,
               std::span<const double> g) {
  CheckDimension(f, map.dimension());
  CheckDimension(g, map.dimension());
  if (map.kind() == MapKind::kNegativeEntropy) {
    CheckOnSimplex(f, /*strictly_positive=*/false);
    CheckOnSimplex(g, /*strictly_positive=*/true);
    double kl = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] > 0.0) kl += f[i] * std::log(f[i] / g[i]);
    }
    return std::max(kl, 0.0);
  }
  if (!AllFinite(f) || !AllFinite(g)) {
    throw InvalidInput("non-finite coordinate");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = f[i] - g[i];
    s += d * d;
  }
  return 0.5 * s;
}

Vec ProxStep(const MirrorMap& map, std::span<const double> base,
             std::span<const double> loss, double eta) {
  map.CheckPoint(base);
  CheckDimension(loss, map.dimension());
  if (!AllFinite(loss)) throw InvalidInput("non-finite loss entry");
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw InvalidInput("step size must be positive and finite");
  }
  if (map.kind() == MapKind::kNegativeEntropy) {
    return SimplexPoint::FromWeights(base).Tilted(loss, eta).weights();
  }
  return map.Project(Axpy(base, -eta, loss));
}

}  // namespace omd
