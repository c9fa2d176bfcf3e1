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

#include "dalpha/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dalpha/error.hpp"

namespace dalpha {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void collect_partitions(int remaining, int min_part, std::vector<int>& prefix,
                        std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    prefix.push_back(p);
    collect_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Graph make_path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph_from_edges(n, e);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, e);
}

Graph make_complete(int n) {
  Graph empty(n);
  return complement(empty);
}

Graph make_star(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return graph_from_edges(n, e);
}

Graph make_cocktail_party(int k) {
  require(k >= 1, "cocktail party graph needs k >= 1");
  return make_complete_multipartite(std::vector<int>(k, 2));
}

Graph make_cycle_union(std::span<const int> lengths) {
  const int n = std::accumulate(lengths.begin(), lengths.end(), 0);
  std::vector<Edge> e;
  int offset = 0;
  for (int len : lengths) {
    require(len >= 3, "cycle lengths must be >= 3");
    for (int i = 0; i < len; ++i) e.emplace_back(offset + i, offset + (i + 1) % len);
    offset += len;
  }
  return graph_from_edges(n, e);
}

Graph make_complete_multipartite(std::span<const int> parts) {
  require(!parts.empty(), "complete multipartite graph needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] > 0, "part sizes must be positive");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  require(n <= Graph::kMaxOrder, "complete multipartite graph exceeds n = 62");
  std::vector<Graph::Row> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (part_of[u] != part_of[v]) rows[u] |= Graph::Row{1} << v;
    }
  }
  return Graph(n, std::move(rows));
}

Graph make_complete_multipartite(std::initializer_list<int> parts) {
  return make_complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

Graph make_apex_cocktail_party(int n) {
  require(n >= 3 && n % 2 == 1, "K_{1,2,...,2} needs odd n >= 3");
  std::vector<int> parts(1 + (n - 1) / 2, 2);
  parts[0] = 1;
  return make_complete_multipartite(parts);
}

Graph make_dvdr(const Graph& base) {
  require(regular_degree(base).has_value(), "DVDR base graph must be regular");
  const int n = base.order() + 1;
  require(n <= Graph::kMaxOrder, "DVDR graph exceeds n = 62");
  std::vector<Graph::Row> rows(n, 0);
  rows[0] = ((Graph::Row{1} << n) - 1) & ~Graph::Row{1};
  for (int v = 0; v < base.order(); ++v) rows[v + 1] = (base.row(v) << 1) | 1;
  return Graph(n, std::move(rows));
}

std::vector<std::vector<int>> partitions_min_part(int total, int min_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  if (total > 0) collect_partitions(total, std::max(min_part, 1), prefix, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Graph> enumerate_n4_dvdr(int n) {
  require(n >= 4 && n % 2 == 0, "(n-4)-DVDR enumeration needs even n >= 4");
  require(n <= Graph::kMaxOrder, "order exceeds n = 62");
  std::vector<Graph> out;
  for (const auto& lengths : partitions_min_part(n - 1, 3)) {
    out.push_back(make_dvdr(complement(make_cycle_union(lengths))));
  }
  return out;
}

std::vector<Graph> extremal_family(int n) {
  if (n % 2 == 1) {
    require(n >= 3, "extremal family needs n >= 3 for odd n");
    return {make_apex_cocktail_party(n)};
  }
  require(n >= 4, "extremal family needs n >= 4 for even n");
  return enumerate_n4_dvdr(n);
}

Graph make_family(const FamilySpec& spec) {
  struct Visitor {
    Graph operator()(const family::CompleteMultipartite& f) const {
      return make_complete_multipartite(f.parts);
    }
    Graph operator()(const family::DvdrFromRegular& f) const { return make_dvdr(f.base); }
    Graph operator()(const family::Path& f) const { return make_path(f.n); }
    Graph operator()(const family::Cycle& f) const { return make_cycle(f.n); }
    Graph operator()(const family::Complete& f) const { return make_complete(f.n); }
    Graph operator()(const family::Star& f) const { return make_star(f.n); }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace dalpha
