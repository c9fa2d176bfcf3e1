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

#ifndef DALPHA_FAMILIES_HPP_
#define DALPHA_FAMILIES_HPP_

#include <span>
#include <variant>
#include <vector>

#include "dalpha/graph.hpp"

namespace dalpha {

Graph make_path(int n);
Graph make_cycle(int n);  // n >= 3
Graph make_complete(int n);
Graph make_star(int n);  // K_{1,n-1}, hub 0

// K_{2,2,...,2} on 2k vertices: K_{2k} minus a perfect matching.
Graph make_cocktail_party(int k);

// Disjoint union of cycles with the given lengths (each >= 3).
Graph make_cycle_union(std::span<const int> lengths);

// Vertices are laid out part by part; u ~ v iff they lie in different parts.
// Parts must be positive.
Graph make_complete_multipartite(std::span<const int> parts);
Graph make_complete_multipartite(std::initializer_list<int> parts);

// K_{1,2,...,2} of odd order n >= 3.
Graph make_apex_cocktail_party(int n);

// Adds vertex 0 adjacent to every vertex of `base` (base labels shift by
// one). Throws InvalidArgument unless base is regular. The base may be
// disconnected.
Graph make_dvdr(const Graph& base);

// Partitions of `total` into parts >= min_part, each listed in nondecreasing
// order; partitions are ordered by part count, then lexicographically.
std::vector<std::vector<int>> partitions_min_part(int total, int min_part);

// One representative per isomorphism class of (n-4)-DVDR graphs of even order
// n >= 4: the hub joined to the complement of a union of cycles whose lengths
// partition n-1 into parts >= 3. Order follows partitions_min_part.
std::vector<Graph> enumerate_n4_dvdr(int n);

// Graphs meeting the lower bound with equality at order n: K_{1,2,...,2} for
// odd n, every (n-4)-DVDR graph for even n.
std::vector<Graph> extremal_family(int n);

namespace family {
struct CompleteMultipartite {
  std::vector<int> parts;
};
struct DvdrFromRegular {
  Graph base;
};
struct Path {
  int n;
};
struct Cycle {
  int n;
};
struct Complete {
  int n;
};
struct Star {
  int n;
};
}  // namespace family

using FamilySpec =
    std::variant<family::CompleteMultipartite, family::DvdrFromRegular,
                 family::Path, family::Cycle, family::Complete, family::Star>;

Graph make_family(const FamilySpec& spec);

}  // namespace dalpha

#endif  // DALPHA_FAMILIES_HPP_
