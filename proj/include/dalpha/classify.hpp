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

#ifndef DALPHA_CLASSIFY_HPP_
#define DALPHA_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dalpha/graph.hpp"
#include "dalpha/transmission.hpp"

namespace dalpha {

enum class ClassTag {
  kTransmissionRegular,
  kExtremalOdd,       // K_{1,2,...,2}
  kExtremalEvenDvdr,  // (n-4)-DVDR
  kDvdr,              // some other r-DVDR graph
  kOther,
};

struct GraphClass {
  ClassTag tag = ClassTag::kOther;
  // kExtremalEvenDvdr: cycle lengths of the complement of G - hub, ascending.
  std::vector<int> cycle_lengths;
  // kDvdr / kExtremal*: degree of the regular remainder G - hub.
  int dvdr_degree = -1;
  int hub = -1;
  std::string details;

  bool extremal() const {
    return tag == ClassTag::kExtremalOdd || tag == ClassTag::kExtremalEvenDvdr;
  }
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

// Short label: "TransmissionRegular", "ExtremalOdd", "ExtremalEvenDVDR{3,4}",
// "Dvdr(2)" or "Other".
std::string to_string(const GraphClass& c);

// r such that G - v is r-regular for the first vertex v of degree n-1 whose
// removal leaves a regular graph. Absent when no such vertex exists or n < 2.
std::optional<int> is_dvdr(const Graph& g);

// Structural classification, checked in the order of ClassTag. Extremal
// membership uses complement signatures, never isomorphism tests:
//   odd n:  exactly one vertex of degree n-1 and the complement is a perfect
//           matching on the other n-1 vertices;
//   even n: a vertex of degree n-1 whose removal leaves a graph with
//           2-regular complement.
// Throws DisconnectedGraph for disconnected input.
GraphClass classify(const Graph& g);
GraphClass classify(const Graph& g, const TransmissionVector& t);

}  // namespace dalpha

#endif  // DALPHA_CLASSIFY_HPP_
