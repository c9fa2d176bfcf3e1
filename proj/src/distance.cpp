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

#include "dalpha/distance.hpp"

#include <algorithm>
#include <bit>

#include "dalpha/error.hpp"

namespace dalpha {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> d)
    : n_(n), d_(std::move(d)), diameter_(0) {
  if (n < 1 || d_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgument("distance matrix size does not match order");
  }
  diameter_ = *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix apsp(const Graph& g) {
  const int n = g.order();
  const Graph::Row all = g.vertex_mask();
  std::vector<int> d(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<std::size_t>(s) * n;
    Graph::Row seen = Graph::Row{1} << s;
    Graph::Row frontier = seen;
    for (int level = 1; frontier != 0; ++level) {
      Graph::Row next = 0;
      for (Graph::Row f = frontier; f != 0; f &= f - 1) {
        next |= g.row(std::countr_zero(f));
      }
      frontier = next & ~seen;
      seen |= frontier;
      for (Graph::Row f = frontier; f != 0; f &= f - 1) {
        row[std::countr_zero(f)] = level;
      }
    }
    if (seen != all) throw DisconnectedGraph();
  }
  return DistanceMatrix(n, std::move(d));
}

}  // namespace dalpha
