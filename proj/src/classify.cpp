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

#include "dalpha/classify.hpp"

#include "dalpha/distance.hpp"
#include "dalpha/error.hpp"

namespace dalpha {
namespace {

std::optional<int> first_hub(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return v;
  }
  return std::nullopt;
}

int hub_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) == g.order() - 1;
  return count;
}

}  // namespace

std::string to_string(const GraphClass& c) {
  switch (c.tag) {
    case ClassTag::kTransmissionRegular:
      return "TransmissionRegular";
    case ClassTag::kExtremalOdd:
      return "ExtremalOdd";
    case ClassTag::kExtremalEvenDvdr: {
      std::string s = "ExtremalEvenDVDR{";
      for (std::size_t i = 0; i < c.cycle_lengths.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.cycle_lengths[i]);
      }
      return s + "}";
    }
    case ClassTag::kDvdr:
      return "Dvdr(" + std::to_string(c.dvdr_degree) + ")";
    case ClassTag::kOther:
      return "Other";
  }
  return "Other";
}

std::optional<int> is_dvdr(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != n - 1) continue;
    if (auto r = regular_degree(delete_vertex(g, v))) return r;
  }
  return std::nullopt;
}

GraphClass classify(const Graph& g) {
  return classify(g, transmissions(apsp(g)));
}

GraphClass classify(const Graph& g, const TransmissionVector& t) {
  if (!is_connected(g)) throw DisconnectedGraph();
  const int n = g.order();
  GraphClass c;
  if (t.regular()) {
    c.tag = ClassTag::kTransmissionRegular;
    c.details = "all transmissions equal " + std::to_string(t.tr_max);
    return c;
  }

  const std::optional<int> hub = first_hub(g);
  if (hub && n % 2 == 1 && n >= 3 && hub_count(g) == 1) {
    const Graph co = complement(g);
    bool matching = true;
    for (int v = 0; v < n && matching; ++v) {
      matching = co.degree(v) == (v == *hub ? 0 : 1);
    }
    if (matching) {
      c.tag = ClassTag::kExtremalOdd;
      c.hub = *hub;
      c.dvdr_degree = n - 3;
      c.details = "hub " + std::to_string(*hub) +
                  "; complement is a perfect matching on the other vertices";
      return c;
    }
  }
  if (hub && n % 2 == 0 && n >= 4) {
    const Graph co = complement(delete_vertex(g, *hub));
    if (regular_degree(co) == 2) {
      c.tag = ClassTag::kExtremalEvenDvdr;
      c.hub = *hub;
      c.dvdr_degree = n - 4;
      c.cycle_lengths = cycle_lengths(co);
      c.details = "hub " + std::to_string(*hub) +
                  "; complement of the remainder is a union of cycles";
      return c;
    }
  }
  if (auto r = is_dvdr(g)) {
    c.tag = ClassTag::kDvdr;
    c.dvdr_degree = *r;
    c.hub = *first_hub(g);
    c.details = std::to_string(*r) + "-DVDR";
    return c;
  }
  c.tag = ClassTag::kOther;
  return c;
}

}  // namespace dalpha
