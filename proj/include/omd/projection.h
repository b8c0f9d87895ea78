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

#ifndef OMD_PROJECTION_H_
#define OMD_PROJECTION_H_

#include <span>
#include <stdexcept>

#include "omd/linalg.h"

namespace omd {

// Thrown when an iterative projection does not reach its tolerance.
class ProjectionError : public std::runtime_error {
 public:
  ProjectionError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct AffineProjection {
  Vec point;
  double residual = 0.0;  // ||M p - b||_inf at the returned point
  int iterations = 0;     // conjugate gradient iterations spent
  bool converged = false;
};

// Euclidean projection of `point` onto {f : M f = b}. Solves the normal
// equations (M M^T) lambda = M point - b by conjugate gradients and returns
// point - M^T lambda. The iteration budget is 10 * rows; on exhaustion the
// result carries converged = false and the final residual.
AffineProjection ProjectAffine(std::span<const double> point,
                               const SparseRows& m, std::span<const double> b,
                               double tol);

// Exact sort-based Euclidean projection onto the probability simplex.
Vec ProjectSimplex(std::span<const double> point);

// Euclidean projection onto the origin-centred ball of the given radius.
Vec ProjectBall(std::span<const double> point, double radius);

}  // namespace omd

#endif  // OMD_PROJECTION_H_
