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

#ifndef DALPHA_GRAPH_HPP_
#define DALPHA_GRAPH_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dalpha {

// Simple undirected graph on vertices 0..n-1 stored as one adjacency bitmask
// per vertex. Values are immutable once constructed.
class Graph {
 public:
  // Largest order representable by a one-byte graph6 size field.
  static constexpr int kMaxOrder = 62;

  using Row = std::uint64_t;

  // Edgeless graph on n vertices. 1 <= n <= kMaxOrder.
  explicit Graph(int n);

  // Takes ownership of adjacency rows; rejects asymmetric rows, loops, and
  // bits beyond n.
  Graph(int n, std::vector<Row> rows);

  int order() const { return n_; }
  int edge_count() const;

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  Row row(int v) const { return rows_[v]; }
  std::span<const Row> rows() const { return rows_; }
  int degree(int v) const;

  // Neighbours of v in increasing label order.
  std::vector<int> neighbors(int v) const;

  // Mask with the low `order()` bits set.
  Row vertex_mask() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Row> rows_;
};

using Edge = std::pair<int, int>;

// Builds a graph from an edge list; duplicates collapse. Throws
// InvalidArgument on out-of-range endpoints or self-loops.
Graph graph_from_edges(int n, std::span<const Edge> edges);
Graph graph_from_edges(int n, std::initializer_list<Edge> edges);

std::vector<Edge> edges(const Graph& g);

// Breadth-first reachability from vertex 0.
bool is_connected(const Graph& g);

Graph complement(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);

// Graph with vertex v removed; labels above v shift down by one.
Graph delete_vertex(const Graph& g, int v);

// Lengths of the cycles of a 2-regular graph, sorted ascending. Throws
// InvalidArgument when g is not 2-regular.
std::vector<int> cycle_lengths(const Graph& g);

// Common degree if every vertex has the same degree.
std::optional<int> regular_degree(const Graph& g);

}  // namespace dalpha

#endif  // DALPHA_GRAPH_HPP_
