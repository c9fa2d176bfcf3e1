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

#ifndef DALPHA_MATRIX_HPP_
#define DALPHA_MATRIX_HPP_

#include <span>
#include <vector>

#include "dalpha/alpha.hpp"
#include "dalpha/distance.hpp"
#include "dalpha/transmission.hpp"

namespace dalpha {

// Dense real symmetric matrix, row-major. Symmetry is checked exactly on
// construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix(int n, std::vector<double> entries);

  int order() const { return n_; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const double> row(int i) const {
    return std::span<const double>(a_).subspan(static_cast<std::size_t>(i) * n_, n_);
  }
  std::span<const double> entries() const { return a_; }

  double max_row_sum() const;
  bool is_diagonal() const;

  // y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;

 private:
  int n_;
  std::vector<double> a_;
};

// alpha * diag(tr) + (1 - alpha) * D. Throws InvalidArgument when d and t
// disagree in size.
SymmetricMatrix build_d_alpha(const DistanceMatrix& d, const TransmissionVector& t,
                              Alpha alpha);

}  // namespace dalpha

#endif  // DALPHA_MATRIX_HPP_
