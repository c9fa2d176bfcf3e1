// Copyright 2026 The dalpha Authors
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

#ifndef DALPHA_TESTS_TEST_SUPPORT_HPP_
#define DALPHA_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dalpha/graph.hpp"
#include "dalpha/graph6.hpp"
#include "dalpha/matrix.hpp"

namespace dalpha::testing {

inline std::string data_path(const std::string& name) {
  return std::string(DALPHA_TEST_DATA_DIR) + "/" + name;
}

inline std::vector<Graph> load_enumeration(int n) {
  std::ifstream in(data_path("connected" + std::to_string(n) + ".g6"));
  return read_graph6(in);
}

// Uniform labels, random spanning tree plus independent extra edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_p) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    e.emplace_back(perm[i], perm[pick(rng)]);
  }
  std::bernoulli_distribution coin(extra_p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return graph_from_edges(n, e);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return graph_from_edges(n, e);
}

// Number of eigenvalues of m strictly below x, from the signs of the pivots
// of an LDL^T factorization of m - xI (Sylvester's law of inertia).
inline int eigenvalues_below(const SymmetricMatrix& m, double x) {
  const int n = m.order();
  std::vector<double> a(m.entries().begin(), m.entries().end());
  for (int i = 0; i < n; ++i) a[i * n + i] -= x;
  int negative = 0;
  for (int k = 0; k < n; ++k) {
    double pivot = a[k * n + k];
    if (pivot == 0.0) pivot = -1e-300;
    if (pivot < 0) ++negative;
    for (int i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / pivot;
      for (int j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return negative;
}

// Largest eigenvalue by bisection on the inertia count. Shares nothing with
// the power-iteration or Jacobi code paths.
inline double largest_eigenvalue_by_bisection(const SymmetricMatrix& m) {
  double bound = 0.0;
  for (int i = 0; i < m.order(); ++i) {
    double s = 0.0;
    for (double v : m.row(i)) s += std::abs(v);
    bound = std::max(bound, s);
  }
  double lo = -bound - 1.0;
  double hi = bound + 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (eigenvalues_below(m, mid) == m.order()) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace dalpha::testing

#endif  // DALPHA_TESTS_TEST_SUPPORT_HPP_
