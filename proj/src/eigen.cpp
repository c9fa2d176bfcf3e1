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

#include "dalpha/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dalpha/error.hpp"

namespace dalpha {
namespace {

double norm2(std::span<const double> x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

double residual_inf(const SymmetricMatrix& m, std::span<const double> x, double mu) {
  std::vector<double> y(x.size());
  m.multiply(x, y);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(y[i] - mu * x[i]));
  return r;
}

SpectralResult from_jacobi(const SymmetricMatrix& m, long iterations) {
  const int n = m.order();
  const SymmetricEigensystem sys = jacobi_eigensolve(m);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = sys.vectors[static_cast<std::size_t>(i) * n + n - 1];
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (sum < 0) {
    for (double& v : x) v = -v;
  }
  SpectralResult out;
  out.mu = sys.values.back();
  out.residual = residual_inf(m, x, out.mu);
  out.perron = std::move(x);
  out.iterations = iterations;
  out.path = SolverPath::kJacobi;
  return out;
}

}  // namespace

std::string_view to_string(SolverPath path) {
  switch (path) {
    case SolverPath::kDiagonal:
      return "diagonal";
    case SolverPath::kPowerIteration:
      return "power-iteration";
    case SolverPath::kJacobi:
      return "jacobi";
  }
  return "unknown";
}

SpectralResult spectral_radius(const SymmetricMatrix& m,
                               const PowerIterationOptions& options) {
  const int n = m.order();
  if (m.is_diagonal()) {
    SpectralResult out;
    out.path = SolverPath::kDiagonal;
    out.mu = m.at(0, 0);
    for (int i = 1; i < n; ++i) out.mu = std::max(out.mu, m.at(i, i));
    return out;
  }

  const double sigma = m.max_row_sum();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double previous = 0.0;
  for (long it = 1; it <= options.max_iterations; ++it) {
    m.multiply(x, y);
    const double mu = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double residual = 0.0;
    for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - mu * x[i]));
    const double scale = std::max(1.0, std::abs(mu));
    if (it > 1 && std::abs(mu - previous) <= options.estimate_tolerance * scale &&
        residual <= options.residual_tolerance * scale) {
      SpectralResult out;
      out.mu = mu;
      out.perron = x;
      out.iterations = it;
      out.residual = residual;
      out.path = SolverPath::kPowerIteration;
      return out;
    }
    previous = mu;
    for (int i = 0; i < n; ++i) y[i] += sigma * x[i];
    const double len = norm2(y);
    for (int i = 0; i < n; ++i) x[i] = y[i] / len;
  }
  return from_jacobi(m, options.max_iterations);
}

SymmetricEigensystem jacobi_eigensolve(const SymmetricMatrix& m) {
  const int n = m.order();
  std::vector<double> a(m.entries().begin(), m.entries().end());
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

  double frob = 0.0;
  for (double e : a) frob += e * e;
  const double threshold = 1e-30 * std::max(frob, 1e-300);

  SymmetricEigensystem out;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    }
    out.sweeps = sweep - 1;
    if (off <= threshold) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k);
          const double aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
    out.sweeps = sweep;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return A(i, i) < A(j, j); });
  out.values.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = A(order[k], order[k]);
    for (int i = 0; i < n; ++i) {
      out.vectors[static_cast<std::size_t>(i) * n + k] = V(i, order[k]);
    }
  }
  return out;
}

}  // namespace dalpha
