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

#ifndef DALPHA_DISTANCE_HPP_
#define DALPHA_DISTANCE_HPP_

#include <span>
#include <vector>

#include "dalpha/graph.hpp"

namespace dalpha {

// Shortest-path distances of a connected graph, row-major n x n.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> d);

  int order() const { return n_; }
  int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const int> row(int i) const {
    return std::span<const int>(d_).subspan(static_cast<std::size_t>(i) * n_, n_);
  }
  int diameter() const { return diameter_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int n_;
  std::vector<int> d_;
  int diameter_;
};

// One BFS per source. Throws DisconnectedGraph when some pair is unreachable.
DistanceMatrix apsp(const Graph& g);

}  // namespace dalpha

#endif  // DALPHA_DISTANCE_HPP_
