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

// Independent reference computations used only by the tests.

#ifndef OMD_TESTS_ORACLES_H_
#define OMD_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "omd/linalg.h"
#include "omd/max_flow.h"

namespace omd::testing {

// Value of min_f max_x f^T A x by a dense tableau simplex with Bland's rule.
// With B = A + 2 > 0, the row player's LP is max 1^T u s.t. B^T u <= 1,
// u >= 0, and the game value is 1 / max - 2.
inline double GameValue(const Matrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  // Constraint j: sum_i B(i, j) u_i + s_j = 1. Columns: u (n), s (m), rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<double>> tab(m + 1, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) tab[j][i] = a(i, j) + 2.0;
    tab[j][n + j] = 1.0;
    tab[j][width - 1] = 1.0;
    basis[j] = n + j;
  }
  // Objective row holds reduced costs of -1^T u.
  for (std::size_t i = 0; i < n; ++i) tab[m][i] = -1.0;
  const double eps = 1e-12;
  while (true) {
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (tab[m][c] < -eps) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      if (tab[r][enter] > eps) {
        const double ratio = tab[r][width - 1] / tab[r][enter];
        if (leave == m || ratio < best - eps ||
            (std::abs(ratio - best) <= eps && basis[r] < basis[leave])) {
          best = ratio;
          leave = r;
        }
      }
    }
    if (leave == m) return std::numeric_limits<double>::quiet_NaN();
    const double pivot = tab[leave][enter];
    for (double& v : tab[leave]) v /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || tab[r][enter] == 0.0) continue;
      const double f = tab[r][enter];
      for (std::size_t c = 0; c < width; ++c) tab[r][c] -= f * tab[leave][c];
    }
    basis[leave] = enter;
  }
  return 1.0 / tab[m][width - 1] - 2.0;
}

// Exact max flow of an undirected unit-capacity network (Edmonds-Karp).
inline int ExactMaxFlow(const FlowNetwork& net) {
  const std::size_t n = net.nodes;
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : net.edges) {
    ++cap[u][v];
    ++cap[v][u];
  }
  int flow = 0;
  while (true) {
    std::vector<int> parent(n, -1);
    parent[net.source] = static_cast<int>(net.source);
    std::queue<std::size_t> q;
    q.push(net.source);
    while (!q.empty() && parent[net.sink] < 0) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = static_cast<int>(u);
          q.push(v);
        }
      }
    }
    if (parent[net.sink] < 0) return flow;
    for (std::size_t v = net.sink; v != net.source;) {
      const auto u = static_cast<std::size_t>(parent[v]);
      --cap[u][v];
      ++cap[v][u];
      v = u;
    }
    ++flow;
  }
}

// Minimizer of a unimodal function on [lo, hi].
inline double GoldenSection(const std::function<double(double)>& f, double lo,
                            double hi, double tol) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol * std::max(1.0, std::abs(a) + std::abs(b))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

inline Matrix RandomMatrix(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  Matrix a(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a(i, j) = draw(rng);
  }
  return a;
}

inline Vec RandomSimplexPoint(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> draw(1.0);
  Vec p(n);
  for (double& v : p) v = draw(rng) + 1e-3;
  double s = 0.0;
  for (double v : p) s += v;
  for (double& v : p) v /= s;
  return p;
}

// Connected graph: a random spanning tree plus extra random edges, with at
// most max_edges edges in total and no self-loops.
inline FlowNetwork RandomConnectedGraph(std::mt19937_64& rng,
                                        std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> node_count(4, 14);
  FlowNetwork net;
  net.nodes = node_count(rng);
  for (std::size_t v = 1; v < net.nodes; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    net.edges.emplace_back(pick(rng), v);
  }
  std::uniform_int_distribution<std::size_t> extra_count(
      0, max_edges - net.edges.size());
  const std::size_t extra = extra_count(rng);
  std::uniform_int_distribution<std::size_t> any(0, net.nodes - 1);
  for (std::size_t k = 0; k < extra; ++k) {
    std::size_t u = any(rng), v = any(rng);
    while (u == v) v = any(rng);
    net.edges.emplace_back(u, v);
  }
  net.source = any(rng);
  net.sink = any(rng);
  while (net.sink == net.source) net.sink = any(rng);
  return net;
}

}  // namespace omd::testing

#endif  // OMD_TESTS_ORACLES_H_
