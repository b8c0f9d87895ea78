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

#ifndef OMD_MIRROR_MAP_H_
#define OMD_MIRROR_MAP_H_

#include <cstddef>
#include <span>
#include <variant>

#include "omd/linalg.h"

namespace omd {

struct SimplexSet {};

struct BallSet {
  double radius = 1.0;
};

// {f : constraints f = rhs}
struct AffineSet {
  SparseRows constraints;
  Vec rhs;
  double tolerance = 1e-8;
};

using FeasibleSet = std::variant<SimplexSet, BallSet, AffineSet>;

enum class MapKind { kNegativeEntropy, kEuclidean };

// A 1-strongly convex regularizer together with its feasible set.
//
// Negative entropy lives on the simplex and pairs the l1 norm with the l-inf
// dual norm. The Euclidean map R(f) = 0.5 ||f||^2 pairs l2 with l2 and may be
// combined with any feasible set.
class MirrorMap {
 public:
  static MirrorMap NegativeEntropy(std::size_t dimension);
  static MirrorMap Euclidean(std::size_t dimension, FeasibleSet set);

  MapKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  const FeasibleSet& feasible_set() const { return set_; }

  double Norm(std::span<const double> v) const;
  double DualNorm(std::span<const double> v) const;

  // argmin of R over the feasible set: uniform for entropy, the projection of
  // the origin for the Euclidean map.
  Vec InitialPoint() const;

  // Euclidean projection onto the feasible set. Throws ProjectionError when
  // an affine set cannot be reached to tolerance.
  Vec Project(std::span<const double> point) const;

  // Rejects wrong dimensions, non-finite values and (for entropy) points off
  // the simplex.
  void CheckPoint(std::span<const double> point) const;

 private:
  MirrorMap(MapKind kind, std::size_t dimension, FeasibleSet set);

  MapKind kind_;
  std::size_t dimension_;
  FeasibleSet set_;
};

// Probability vector held in log-domain. log_weights() are normalized
// log-probabilities; weights() is the cached exp of them.
class SimplexPoint {
 public:
  static SimplexPoint Uniform(std::size_t n);
  static SimplexPoint FromWeights(std::span<const double> weights);
  static SimplexPoint FromLogWeights(std::span<const double> log_weights);

  std::size_t size() const { return weights_.size(); }
  const Vec& weights() const { return weights_; }
  const Vec& log_weights() const { return log_weights_; }

  // w(i) proportional to w(i) exp(-eta * loss(i)). The loss is centred on its
  // maximum before scaling, so constant shifts of the loss cancel exactly.
  SimplexPoint Tilted(std::span<const double> loss, double eta) const;

  // (1 - beta) w + (beta / n) 1
  SimplexPoint Mixed(double beta) const;

 private:
  SimplexPoint(Vec log_weights, Vec weights)
      : log_weights_(std::move(log_weights)), weights_(std::move(weights)) {}

  Vec log_weights_;
  Vec weights_;
};

// D_R(f, g) = R(f) - R(g) - <grad R(g), f - g>. KL(f || g) for entropy and
// 0.5 ||f - g||^2 for the Euclidean map.
double Bregman(const MirrorMap& map, std::span<const double> f,
               std::span<const double> g);

// argmin_a eta <a, loss> + D_R(a, base) over the map's feasible set.
Vec ProxStep(const MirrorMap& map, std::span<const double> base,
             std::span<const double> loss, double eta);

}  // namespace omd

#endif  // OMD_MIRROR_MAP_H_
