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

#ifndef DALPHA_BOUNDS_HPP_
#define DALPHA_BOUNDS_HPP_

#include "dalpha/alpha.hpp"
#include "dalpha/distance.hpp"
#include "dalpha/eigen.hpp"
#include "dalpha/graph.hpp"
#include "dalpha/transmission.hpp"

namespace dalpha {

// Lower bound on Tr_max - mu_alpha for connected non-transmission-regular
// graphs of order n. rho is 1 for odd n and 2 for even n; tau solves
//   (1-alpha) tau^2 - [(1-alpha) n + rho] tau + rho = 0
// (smaller root) and bound = (1-alpha) tau.
struct BoundParams {
  int n = 0;
  int rho = 0;
  double tau = 0.0;
  double bound = 0.0;
  // Left-hand side of the quadratic above evaluated at tau.
  double quadratic_residual = 0.0;
};

// Requires n >= 3 (odd) or n >= 4 (even) and alpha < 1. Throws Error if the
// computed tau violates 0 < tau < 1 or the quadratic residual exceeds 1e-12.
BoundParams bound_tau(int n, Alpha alpha);

// mu_alpha of K_{1,2,...,2} of odd order n >= 3, from its two-block quotient.
double quotient_mu_odd(int n, Alpha alpha);

// mu_alpha of any (n-4)-DVDR graph of even order n >= 4.
double quotient_mu_even_dvdr(int n, Alpha alpha);

// Tr_max - mu_alpha. Graph overload requires a connected graph with n >= 2.
double gap(const Graph& g, Alpha alpha);
double gap(const DistanceMatrix& d, const TransmissionVector& t, Alpha alpha);

// D_alpha spectral radius of a connected graph, end to end.
SpectralResult mu_alpha(const Graph& g, Alpha alpha);

}  // namespace dalpha

#endif  // DALPHA_BOUNDS_HPP_
