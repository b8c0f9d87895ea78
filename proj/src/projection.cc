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

#include "omd/projection.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace omd {

AffineProjection ProjectAffine(std::span<const double> point,
                               const SparseRows& m, std::span<const double> b,
                               double tol) {
  if (point.size() != m.cols() || b.size() != m.rows()) {
    throw InvalidInput("affine projection: dimension mismatch");
  }
  if (!(tol > 0.0)) throw InvalidInput("affine projection: tol must be > 0");

  AffineProjection out;
  out.point.assign(point.begin(), point.end());
  const std::size_t rows = m.rows();
  if (rows == 0) {
    out.converged = true;
    return out;
  }
  const int budget = static_cast<int>(10 * rows);

  while (true) {
    Vec r = Subtract(m.Apply(out.point), b);
    out.residual = NormInf(r);
    if (out.residual <= tol) {
      out.converged = true;
      return out;
    }
    if (out.iterations >= budget) return out;

    // CG on (M M^T) lambda = r from lambda = 0. The CG residual equals the
    // equality residual of point - M^T lambda, so it drives termination.
    Vec lambda(rows, 0.0);
    Vec res = r;
    Vec dir = res;
    double rr = Dot(res, res);
    int inner = 0;
    while (out.iterations < budget && NormInf(res) > 0.5 * tol) {
      Vec kd = m.Apply(m.ApplyTransposed(dir));
      const double curvature = Dot(dir, kd);
      if (!(curvature > 1e-300)) break;
      const double step = rr / curvature;
      for (std::size_t i = 0; i < rows; ++i) {
        lambda[i] += step * dir[i];
        res[i] -= step * kd[i];
      }
      ++out.iterations;
      ++inner;
      const double rr_next = Dot(res, res);
      const double ratio = rr_next / rr;
      rr = rr_next;
      for (std::size_t i = 0; i < rows; ++i) dir[i] = res[i] + ratio * dir[i];
    }
    if (inner == 0) return out;  // stalled: inconsistent or degenerate system
    const Vec correction = m.ApplyTransposed(lambda);
    for (std::size_t j = 0; j < out.point.size(); ++j) {
      out.point[j] -= correction[j];
    }
  }
}

Vec ProjectSimplex(std::span<const double> point) {
  const std::size_t n = point.size();
  if (n == 0) throw InvalidInput("simplex projection of empty vector");
  Vec sorted(point.begin(), point.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max(point[i] - theta, 0.0);
  return out;
}

Vec ProjectBall(std::span<const double> point, double radius) {
  const double norm = NormL2(point);
  Vec out(point.begin(), point.end());
  if (norm > radius) {
    const double s = radius / norm;
    for (double& v : out) v *= s;
  }
  return out;
}

}  // namespace omd
