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

#include "dalpha/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dalpha/error.hpp"

namespace dalpha {
namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw InvalidArgument("graph order " + std::to_string(n) +
                          " outside supported range [1, " +
                          std::to_string(Graph::kMaxOrder) + "]");
  }
}

Graph::Row low_bits(int n) {
  return n >= 64 ? ~Graph::Row{0} : (Graph::Row{1} << n) - 1;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  rows_.assign(n, 0);
}

Graph::Graph(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
  check_order(n);
  if (static_cast<int>(rows_.size()) != n) {
    throw InvalidArgument("adjacency has " + std::to_string(rows_.size()) +
                          " rows for order " + std::to_string(n));
  }
  const Row mask = low_bits(n);
  for (int u = 0; u < n; ++u) {
    if (rows_[u] & ~mask) {
      throw InvalidArgument("adjacency row " + std::to_string(u) +
                            " references a vertex >= n");
    }
    if (adjacent(u, u)) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    }
    for (int v = u + 1; v < n; ++v) {
      if (adjacent(u, v) != adjacent(v, u)) {
        throw InvalidArgument("adjacency is not symmetric");
      }
    }
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (Row r : rows_) twice += std::popcount(r);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (Row r = rows_[v]; r != 0; r &= r - 1) out.push_back(std::countr_zero(r));
  return out;
}

Graph::Row Graph::vertex_mask() const { return low_bits(n_); }

Graph graph_from_edges(int n, std::span<const Edge> edge_list) {
  check_order(n);
  std::vector<Graph::Row> rows(n, 0);
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") has an endpoint outside [0, " +
                            std::to_string(n) + ")");
    }
    if (u == v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    }
    rows[u] |= Graph::Row{1} << v;
    rows[v] |= Graph::Row{1} << u;
  }
  return Graph(n, std::move(rows));
}

Graph graph_from_edges(int n, std::initializer_list<Edge> edge_list) {
  return graph_from_edges(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

std::vector<Edge> edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  Graph::Row seen = 1;
  Graph::Row frontier = 1;
  while (frontier != 0) {
    Graph::Row next = 0;
    for (Graph::Row f = frontier; f != 0; f &= f - 1) {
      next |= g.row(std::countr_zero(f));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertex_mask();
}

Graph complement(const Graph& g) {
  const Graph::Row mask = g.vertex_mask();
  std::vector<Graph::Row> rows(g.order());
  for (int v = 0; v < g.order(); ++v) {
    rows[v] = ~g.row(v) & mask & ~(Graph::Row{1} << v);
  }
  return Graph(g.order(), std::move(rows));
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.order());
  for (int v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
  if (g.order() == 1) {
    throw InvalidArgument("cannot delete the only vertex of a graph");
  }
  const Graph::Row below = (Graph::Row{1} << v) - 1;
  std::vector<Graph::Row> rows;
  rows.reserve(g.order() - 1);
  for (int u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    const Graph::Row r = g.row(u);
    rows.push_back((r & below) | ((r >> 1) & ~below));
  }
  return Graph(g.order() - 1, std::move(rows));
}

std::optional<int> regular_degree(const Graph& g) {
  const int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<int> cycle_lengths(const Graph& g) {
  if (regular_degree(g) != 2) {
    throw InvalidArgument("cycle decomposition requires a 2-regular graph");
  }
  std::vector<int> lengths;
  Graph::Row unseen = g.vertex_mask();
  while (unseen != 0) {
    // Flood the component; in a 2-regular graph it is a single cycle.
    Graph::Row comp = unseen & (~unseen + 1);
    Graph::Row frontier = comp;
    while (frontier != 0) {
      Graph::Row next = 0;
      for (Graph::Row f = frontier; f != 0; f &= f - 1) {
        next |= g.row(std::countr_zero(f));
      }
      frontier = next & ~comp;
      comp |= next;
    }
    lengths.push_back(std::popcount(comp));
    unseen &= ~comp;
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace dalpha
