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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "omd/projection.h"
#include "oracles.h"

namespace omd {
namespace {

using testing::RandomSimplexPoint;

TEST(BregmanTest, EntropyIdentityIsZero) {
  const MirrorMap map = MirrorMap::NegativeEntropy(2);
  EXPECT_EQ(Bregman(map, Vec{0.5, 0.5}, Vec{0.5, 0.5}), 0.0);
}

TEST(BregmanTest, EntropyNearVertexIsLogTwo) {
  const MirrorMap map = MirrorMap::NegativeEntropy(2);
  const Vec f = {1.0 - 1e-12, 1e-12};
  // KL(f || uniform) evaluated term by term.
  const double expected =
      f[0] * std::log(f[0] / 0.5) + f[1] * std::log(f[1] / 0.5);
  EXPECT_NEAR(Bregman(map, f, Vec{0.5, 0.5}), expected, 1e-12);
  EXPECT_NEAR(Bregman(map, f, Vec{0.5, 0.5}), std::log(2.0), 1e-10);
}

TEST(BregmanTest, EuclideanHalfSquaredDistance) {
  const MirrorMap map = MirrorMap::Euclidean(2, BallSet{10.0});
  EXPECT_DOUBLE_EQ(Bregman(map, Vec{1.0, 0.0}, Vec{0.0, 1.0}), 1.0);
}

TEST(BregmanTest, RejectsDomainViolations) {
  const MirrorMap map = MirrorMap::NegativeEntropy(2);
  EXPECT_THROW(Bregman(map, Vec{0.5, 0.5}, Vec{1.0, 0.0}), InvalidInput);
  EXPECT_THROW(Bregman(map, Vec{1.5, -0.5}, Vec{0.5, 0.5}), InvalidInput);
  EXPECT_THROW(Bregman(map, Vec{1.0}, Vec{0.5, 0.5}), InvalidInput);
}

TEST(BregmanTest, NonnegativeAndStronglyConvexOnRandomPairs) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  const MirrorMap entropy = MirrorMap::NegativeEntropy(6);
  const MirrorMap euclid = MirrorMap::Euclidean(6, BallSet{5.0});
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec f = RandomSimplexPoint(6, rng);
    const Vec g = RandomSimplexPoint(6, rng);
    const double kl = Bregman(entropy, f, g);
    EXPECT_GE(kl, 0.0);
    EXPECT_EQ(Bregman(entropy, f, f), 0.0);
    const double l1 = NormL1(Subtract(f, g));
    EXPECT_GE(kl, 0.5 * l1 * l1 - 1e-9);  // Pinsker

    Vec a(6), b(6);
    for (double& v : a) v = gauss(rng);
    for (double& v : b) v = gauss(rng);
    const double d = Bregman(euclid, a, b);
    EXPECT_EQ(Bregman(euclid, a, a), 0.0);
    const double l2 = NormL2(Subtract(a, b));
    EXPECT_NEAR(d, 0.5 * l2 * l2, 1e-12 * (1.0 + d));
  }
}

TEST(ProxStepTest, EntropyZeroLossKeepsUniform) {
  const MirrorMap map = MirrorMap::NegativeEntropy(3);
  const Vec p = ProxStep(map, Uniform(3), Vec{0, 0, 0}, 1.0);
  for (double v : p) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
}

TEST(ProxStepTest, EntropyHandEvaluation) {
  const MirrorMap map = MirrorMap::NegativeEntropy(2);
  const Vec p = ProxStep(map, Vec{0.5, 0.5}, Vec{std::log(2.0), 0.0}, 1.0);
  EXPECT_NEAR(p[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(p[1], 2.0 / 3.0, 1e-15);
}

TEST(ProxStepTest, EuclideanStepLandsOnBoundary) {
  const MirrorMap map = MirrorMap::Euclidean(2, BallSet{1.0});
  const Vec p = ProxStep(map, Vec{0.0, 0.0}, Vec{2.0, 0.0}, 0.5);
  EXPECT_NEAR(p[0], -1.0, 1e-15);
  EXPECT_NEAR(p[1], 0.0, 1e-15);
}

TEST(ProxStepTest, RejectsNonFiniteLoss) {
  const MirrorMap map = MirrorMap::NegativeEntropy(2);
  EXPECT_THROW(ProxStep(map, Uniform(2), Vec{INFINITY, 0.0}, 1.0),
               InvalidInput);
  const MirrorMap e = MirrorMap::Euclidean(2, BallSet{1.0});
  EXPECT_THROW(ProxStep(e, Vec{0, 0}, Vec{std::nan(""), 0.0}, 1.0),
               InvalidInput);
}

TEST(ProxStepTest, EuclideanAffineSet) {
  SparseRows m(2);
  m.AddRow({{0, 1.0}, {1, 1.0}});
  const MirrorMap map = MirrorMap::Euclidean(2, AffineSet{m, {1.0}});
  const Vec g0 = map.InitialPoint();
  EXPECT_NEAR(g0[0], 0.5, 1e-12);
  EXPECT_NEAR(g0[1], 0.5, 1e-12);
  const Vec p = ProxStep(map, g0, Vec{1.0, -1.0}, 0.1);
  EXPECT_NEAR(p[0], 0.4, 1e-12);
  EXPECT_NEAR(p[1], 0.6, 1e-12);
}

TEST(ProxStepTest, EntropyShiftInvarianceIsBitExact) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> draw(-1024, 1024);
  const MirrorMap map = MirrorMap::NegativeEntropy(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec base = RandomSimplexPoint(7, rng);
    Vec loss(7);
    for (double& v : loss) v = draw(rng) / 1024.0;
    // Dyadic losses and power-of-two shifts keep loss + c exact.
    const double c = std::ldexp(1.0, static_cast<int>(trial % 7));
    const Vec shifted = Axpy(loss, c, Vec(7, 1.0));
    EXPECT_EQ(ProxStep(map, base, loss, 0.3),
              ProxStep(map, base, shifted, 0.3));
  }
}

TEST(SimplexPointTest, WeightsAreNormalizedExpOfLogWeights) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> draw(-50.0, 50.0);
  Vec logw(8);
  for (double& v : logw) v = draw(rng);
  const SimplexPoint p = SimplexPoint::FromLogWeights(logw);
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_GE(p.weights()[i], 0.0);
    EXPECT_NEAR(p.weights()[i], std::exp(p.log_weights()[i]), 1e-15);
    s += p.weights()[i];
  }
  EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(SimplexPointTest, ManyTiltsDoNotUnderflow) {
  SimplexPoint p = SimplexPoint::Uniform(3);
  const Vec loss = {1.0, 0.0, 0.5};
  for (int t = 0; t < 100000; ++t) p = p.Tilted(loss, 0.1);
  EXPECT_NEAR(p.weights()[1], 1.0, 1e-12);
  EXPECT_TRUE(std::isfinite(p.log_weights()[0]));
  EXPECT_LT(p.log_weights()[0], -9000.0);
}

TEST(SimplexPointTest, MixingFloor) {
  const SimplexPoint p = SimplexPoint::FromWeights(Vec{1.0, 0.0, 0.0});
  const double beta = 1e-4;
  const SimplexPoint q = p.Mixed(beta);
  for (double v : q.weights()) EXPECT_GE(v, beta / 3.0 * (1.0 - 1e-12));
  EXPECT_NEAR(q.weights()[0], 1.0 - beta + beta / 3.0, 1e-15);
}

TEST(MirrorMapTest, NormPairing) {
  const MirrorMap e = MirrorMap::NegativeEntropy(2);
  EXPECT_DOUBLE_EQ(e.Norm(Vec{1.0, -2.0}), 3.0);
  EXPECT_DOUBLE_EQ(e.DualNorm(Vec{1.0, -2.0}), 2.0);
  const MirrorMap u = MirrorMap::Euclidean(2, BallSet{1.0});
  EXPECT_DOUBLE_EQ(u.Norm(Vec{3.0, 4.0}), 5.0);
  EXPECT_DOUBLE_EQ(u.DualNorm(Vec{3.0, 4.0}), 5.0);
}

TEST(MirrorMapTest, InitialPoints) {
  EXPECT_EQ(MirrorMap::NegativeEntropy(4).InitialPoint(), Uniform(4));
  EXPECT_EQ(MirrorMap::Euclidean(2, BallSet{1.0}).InitialPoint(),
            (Vec{0.0, 0.0}));
}

}  // namespace
}  // namespace omd
