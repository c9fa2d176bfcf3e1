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

#include "dalpha/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "dalpha/error.hpp"

namespace dalpha {

SymmetricMatrix::SymmetricMatrix(int n, std::vector<double> entries)
    : n_(n), a_(std::move(entries)) {
  if (n < 1) throw InvalidArgument("matrix order must be positive");
  if (a_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgument("matrix entry count does not match order");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) throw InvalidArgument("matrix is not symmetric");
    }
  }
}

double SymmetricMatrix::max_row_sum() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    const auto r = row(i);
    double s = 0.0;
    for (double v : r) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

bool SymmetricMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && at(i, j) != 0.0) return false;
    }
  }
  return true;
}

void SymmetricMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (int i = 0; i < n_; ++i) {
    const double* r = a_.data() + static_cast<std::size_t>(i) * n_;
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += r[j] * x[j];
    y[i] = s;
  }
}

SymmetricMatrix build_d_alpha(const DistanceMatrix& d, const TransmissionVector& t,
                              Alpha alpha) {
  const int n = d.order();
  if (static_cast<int>(t.tr.size()) != n) {
    throw InvalidArgument("transmission vector does not match distance matrix");
  }
  const double a = alpha.value();
  const double b = alpha.complement();
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i) * n + j] = i == j ? a * t.tr[i] : b * d.at(i, j);
    }
  }
  return SymmetricMatrix(n, std::move(m));
}

}  // namespace dalpha
