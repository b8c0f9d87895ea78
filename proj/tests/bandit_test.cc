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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"

namespace omd {
namespace {

TEST(TangentBasisTest, TwoActions) {
  const auto b = TangentBasis(2);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_NEAR(b[0][0], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(b[0][1], -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(TangentBasisTest, ThreeActionsHelmertRows) {
  const auto b = TangentBasis(3);
  ASSERT_EQ(b.size(), 2u);
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  EXPECT_NEAR(b[0][0], 1 / s2, 1e-15);
  EXPECT_NEAR(b[0][1], -1 / s2, 1e-15);
  EXPECT_NEAR(b[0][2], 0.0, 1e-15);
  EXPECT_NEAR(b[1][0], 1 / s6, 1e-15);
  EXPECT_NEAR(b[1][1], 1 / s6, 1e-15);
  EXPECT_NEAR(b[1][2], -2 / s6, 1e-15);
}

TEST(TangentBasisTest, OrthonormalAndZeroSum) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto b = TangentBasis(n);
    ASSERT_EQ(b.size(), n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      EXPECT_NEAR(Sum(b[i]), 0.0, 1e-12);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        EXPECT_NEAR(Dot(b[i], b[j]), i == j ? 1.0 : 0.0, 1e-12);
      }
    }
  }
  EXPECT_THROW(TangentBasis(1), InvalidInput);
}

TEST(BanditEstimateTest, Examples) {
  const Vec u = {1 / std::sqrt(2.0), -1 / std::sqrt(2.0)};
  EXPECT_EQ(BanditEstimate(0.3, 0.3, 0.1, u, 2), (Vec{0.0, -0.0}));
  const Vec e = BanditEstimate(0.52, 0.5, 0.1, u, 2);
  EXPECT_NEAR(e[0], 0.2 * u[0], 1e-14);
  EXPECT_NEAR(e[1], 0.2 * u[1], 1e-14);
  const Vec one = BanditEstimate(0.75, 0.5, 0.1, u, 2);
  const Vec two = BanditEstimate(1.0, 0.5, 0.1, u, 2);
  EXPECT_EQ(Scale(one, 2.0), two);
  EXPECT_THROW(BanditEstimate(1, 0, 0.0, u, 2), InvalidInput);
}

TEST(BanditEtaTest, Examples) {
  const std::size_t n = 3, m = 4;
  const int t = 100;
  const double cap = 1.0 / (28.0 * m * std::sqrt(std::log(m * t)));
  EXPECT_DOUBLE_EQ(BanditEta({}, n, m, t), cap);
  const double raw = std::sqrt(std::log(n * t)) * 3.0 / 9.0;
  EXPECT_DOUBLE_EQ(BanditEta(Vec{9.0}, n, m, t), std::min(raw, cap));
  EXPECT_DOUBLE_EQ(BanditEta(Vec{9.0, 0.0}, n, m, t), cap);
  // Large increments push the ratio below the cap.
  const double big = BanditEta(Vec{1e6, 1e6}, n, m, t);
  EXPECT_LT(big, cap);
  EXPECT_DOUBLE_EQ(big, std::sqrt(std::log(n * t)) *
                            (std::sqrt(2e6) - std::sqrt(1e6)) / 1e6);
}

TEST(MaxBanditDeltaTest, PerturbationsStayInSimplex) {
  const std::size_t n = 4, m = 3;
  const int t = 50;
  const double delta = MaxBanditDelta(n, m, t);
  const double beta = 1.0 / (t * t);
  for (std::size_t k : {n, m}) {
    const Vec floor(k, beta / static_cast<double>(k));
    for (const Vec& u : TangentBasis(k)) {
      for (double s : {-1.0, 1.0}) {
        for (double v : Axpy(floor, s * delta, u)) EXPECT_GE(v, -1e-18);
      }
    }
  }
}

TEST(RunBanditMatchTest, ZeroMatrixStaysUniform) {
  BanditOptions options;
  options.record_plays = true;
  const BanditResult r = RunBanditMatch(PayoffMatrix(Matrix(3, 2)), 100, options);
  for (const auto& row : r.trace) EXPECT_EQ(row.gap, 0.0);
  for (const Vec& f : r.row_plays) {
    for (double v : f) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
  }
}

TEST(RunBanditMatchTest, DeltaClampedOrRejected) {
  const PayoffMatrix a(testing::RandomMatrix(3, 3, 1));
  BanditOptions options;
  options.delta = 1.0;
  const BanditResult r = RunBanditMatch(a, 100, options);
  EXPECT_DOUBLE_EQ(r.delta, MaxBanditDelta(3, 3, 100));
  options.explicit_delta = true;
  EXPECT_THROW(RunBanditMatch(a, 100, options), InvalidInput);
  options.delta = 1e-9;
  EXPECT_DOUBLE_EQ(RunBanditMatch(a, 100, options).delta, 1e-9);
}

TEST(RunBanditMatchTest, DeterministicGivenSeed) {
  const PayoffMatrix a(testing::RandomMatrix(4, 3, 5));
  BanditOptions options;
  options.seed = 17;
  const BanditResult x = RunBanditMatch(a, 300, options);
  const BanditResult y = RunBanditMatch(a, 300, options);
  options.seed = 18;
  const BanditResult z = RunBanditMatch(a, 300, options);
  bool differs = false;
  for (std::size_t k = 0; k < x.trace.size(); ++k) {
    EXPECT_EQ(x.trace[k].gap, y.trace[k].gap);
    EXPECT_EQ(x.trace[k].eta_row, y.trace[k].eta_row);
    differs = differs || x.trace[k].gap != z.trace[k].gap;
  }
  EXPECT_TRUE(differs);
}

TEST(RunBanditMatchTest, StepSizesRespectCap) {
  const PayoffMatrix a(testing::RandomMatrix(5, 4, 8));
  const BanditResult r = RunBanditMatch(a, 500);
  for (const auto& row : r.trace) {
    EXPECT_LE(row.eta_row, row.cert_rhs_row);
    EXPECT_LE(row.eta_col, row.cert_rhs_col);
    EXPECT_GT(row.eta_row, 0.0);
  }
}

// Averaging the estimate over every basis direction reproduces
// (n / (n - 1)) P A x with P the projection onto the tangent space.
void ExpectEnumerationIdentity(std::size_t n, std::size_t m,
                               std::uint64_t seed) {
  const Matrix a = testing::RandomMatrix(n, m, seed);
  BanditOptions options;
  options.seed = seed;
  options.record_plays = true;
  const BanditResult r = RunBanditMatch(PayoffMatrix(a), 200, options);
  const auto basis = TangentBasis(n);
  for (std::size_t t = 0; t < r.row_plays.size(); ++t) {
    const Vec& f = r.row_plays[t];
    const Vec ax = a.Apply(r.col_plays[t]);
    Vec mean(n, 0.0);
    for (const Vec& u : basis) {
      const double rp = Dot(Axpy(f, r.delta, u), ax);
      const double rm = Dot(Axpy(f, -r.delta, u), ax);
      mean = Axpy(mean, 1.0 / (n - 1.0), BanditEstimate(rp, rm, r.delta, u, n));
    }
    const double avg = Sum(ax) / n;
    for (std::size_t i = 0; i < n; ++i) {
      const double expected = n / (n - 1.0) * (ax[i] - avg);
      EXPECT_NEAR(mean[i], expected, 1e-9) << "round " << t + 1;
    }
  }
}

TEST(RunBanditMatchTest, EnumerationIdentity) {
  ExpectEnumerationIdentity(3, 4, 3);
  ExpectEnumerationIdentity(5, 5, 4);
}

TEST(MakeBanditPlayerTest, Validation) {
  EXPECT_THROW(MakeBanditPlayer(1, 2, 10, 1e-9, 0, 1), InvalidInput);
  EXPECT_THROW(MakeBanditPlayer(2, 2, 1, 1e-9, 0, 1), InvalidInput);
  EXPECT_THROW(MakeBanditPlayer(2, 2, 10, 0.1, 0, 1), InvalidInput);
  const BanditPlayer p = MakeBanditPlayer(3, 2, 10, 1e-9, 0, 1);
  EXPECT_LT(p.previous_index, 2u);
  EXPECT_EQ(p.previous_bar_estimate, Vec(3, 0.0));
}

}  // namespace
}  // namespace omd
