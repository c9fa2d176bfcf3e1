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

#include "dalpha/bounds.hpp"

#include <cmath>
#include <string>

#include "dalpha/error.hpp"
#include "dalpha/matrix.hpp"

namespace dalpha {

BoundParams bound_tau(int n, Alpha alpha) {
  alpha.require_below_one();
  const bool odd = n % 2 == 1;
  if ((odd && n < 3) || (!odd && n < 4)) {
    throw InvalidArgument("bound needs n >= 3 (odd) or n >= 4 (even), got n = " +
                          std::to_string(n));
  }
  BoundParams p;
  p.n = n;
  p.rho = odd ? 1 : 2;
  const double c = alpha.complement();
  const double a = c * n + p.rho;
  const double disc = a * a - 4.0 * p.rho * c;
  // Smaller root written without the a - sqrt(disc) cancellation.
  p.tau = 2.0 * p.rho / (a + std::sqrt(disc));
  p.bound = c * p.tau;
  p.quadratic_residual = c * p.tau * p.tau - a * p.tau + p.rho;
  if (std::abs(p.quadratic_residual) > 1e-12) {
    throw Error("tau fails its defining quadratic: residual " +
                std::to_string(p.quadratic_residual));
  }
  if (!(p.tau > 0.0 && p.tau < 1.0)) {
    throw Error("tau = " + std::to_string(p.tau) + " outside (0,1)");
  }
  return p;
}

double quotient_mu_odd(int n, Alpha alpha) {
  alpha.require_below_one();
  if (n < 3 || n % 2 == 0) throw InvalidArgument("quotient_mu_odd needs odd n >= 3");
  const double a = alpha.value();
  const double c = alpha.complement();
  const double s = c * n + 1.0;
  return ((1.0 + a) * n - 1.0 + std::sqrt(s * s - 4.0 * c)) / 2.0;
}

double quotient_mu_even_dvdr(int n, Alpha alpha) {
  alpha.require_below_one();
  if (n < 4 || n % 2 == 1) throw InvalidArgument("quotient_mu_even_dvdr needs even n >= 4");
  const double a = alpha.value();
  const double c = alpha.complement();
  const double s = c * n + 2.0;
  return ((1.0 + a) * n + std::sqrt(s * s - 8.0 * c)) / 2.0;
}

double gap(const DistanceMatrix& d, const TransmissionVector& t, Alpha alpha) {
  if (d.order() < 2) throw InvalidArgument("gap needs n >= 2");
  return t.tr_max - spectral_radius(build_d_alpha(d, t, alpha)).mu;
}

double gap(const Graph& g, Alpha alpha) {
  const DistanceMatrix d = apsp(g);
  return gap(d, transmissions(d), alpha);
}

SpectralResult mu_alpha(const Graph& g, Alpha alpha) {
  const DistanceMatrix d = apsp(g);
  return spectral_radius(build_d_alpha(d, transmissions(d), alpha));
}

}  // namespace dalpha
