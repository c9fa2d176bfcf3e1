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

#ifndef DALPHA_QUOTIENT_HPP_
#define DALPHA_QUOTIENT_HPP_

#include <vector>

#include "dalpha/matrix.hpp"

namespace dalpha {

// Block-average row sums of a partitioned matrix. When `equitable` is true,
// every block has constant row sums and the quotient shares the spectral
// radius of the source matrix (for nonnegative sources).
struct QuotientMatrix {
  int blocks = 0;
  std::vector<double> b;  // row-major blocks x blocks
  bool equitable = false;

  double at(int i, int j) const { return b[static_cast<std::size_t>(i) * blocks + j]; }
};

using VertexPartition = std::vector<std::vector<int>>;

// Throws InvalidArgument unless the blocks are nonempty, disjoint, and cover
// 0..n-1. Row sums count as constant when they agree within
// 1e-12 * max(1, |sum|).
QuotientMatrix equitable_quotient(const SymmetricMatrix& m, const VertexPartition& partition);

}  // namespace dalpha

#endif  // DALPHA_QUOTIENT_HPP_
