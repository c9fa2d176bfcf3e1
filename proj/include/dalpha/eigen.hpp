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

#ifndef DALPHA_EIGEN_HPP_
#define DALPHA_EIGEN_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "dalpha/matrix.hpp"

namespace dalpha {

enum class SolverPath { kDiagonal, kPowerIteration, kJacobi };

std::string_view to_string(SolverPath path);

struct SpectralResult {
  double mu = 0.0;
  // Unit-length positive eigenvector for mu. Absent for diagonal input, where
  // the dominant eigenvector need not be unique.
  std::optional<std::vector<double>> perron;
  long iterations = 0;
  // Infinity norm of A x - mu x (0 on the diagonal path).
  double residual = 0.0;
  SolverPath path = SolverPath::kPowerIteration;
};

struct PowerIterationOptions {
  long max_iterations = 1'000'000;
  // Both are relative to max(1, |mu|).
  double estimate_tolerance = 1e-13;
  double residual_tolerance = 1e-11;
};

// Largest eigenvalue and Perron vector of a nonnegative irreducible symmetric
// matrix (a D_alpha matrix of a connected graph).
//
// Runs power iteration on A + sigma*I with sigma the largest absolute row sum:
// every shifted eigenvalue is then nonnegative, so mu + sigma dominates and
// the iterates cannot oscillate. Iteration starts from the all-ones vector
// and stops when successive Rayleigh quotients agree and the residual is
// small. If max_iterations is exhausted the full Jacobi eigensolve takes over
// and `path` says so. Diagonal matrices (alpha = 1) short-circuit to the
// largest diagonal entry.
SpectralResult spectral_radius(const SymmetricMatrix& m,
                               const PowerIterationOptions& options = {});

// Full spectrum by cyclic Jacobi rotations.
struct SymmetricEigensystem {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n; column k pairs with values[k]
  int sweeps = 0;
};

SymmetricEigensystem jacobi_eigensolve(const SymmetricMatrix& m);

}  // namespace dalpha

#endif  // DALPHA_EIGEN_HPP_
