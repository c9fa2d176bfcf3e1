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

#ifndef DALPHA_CHECK_HPP_
#define DALPHA_CHECK_HPP_

#include <array>
#include <string>
#include <string_view>

#include "dalpha/alpha.hpp"
#include "dalpha/bounds.hpp"
#include "dalpha/classify.hpp"
#include "dalpha/distance.hpp"
#include "dalpha/eigen.hpp"
#include "dalpha/graph.hpp"
#include "dalpha/transmission.hpp"

namespace dalpha {

inline constexpr double kDefaultTolerance = 1e-9;

// Absolute tolerance used for a bound of the given size.
inline double bound_tolerance(double tol, double bound) {
  return tol * (bound > 1.0 ? bound : 1.0);
}

enum class Verdict { kHolds, kEqualityStructural, kViolation };

std::string_view to_string(Verdict v);

// Everything about a graph that does not depend on alpha.
struct GraphAnalysis {
  Graph graph;
  DistanceMatrix distances;
  TransmissionVector transmissions;
  GraphClass cls;
};

// Throws DisconnectedGraph.
GraphAnalysis analyze_structure(const Graph& g);

struct BoundCheck {
  double alpha = 0.0;
  int tr_max = 0;
  double mu = 0.0;
  double gap = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // gap - bound
  double tolerance = 0.0;  // absolute, tol * max(1, bound)
  Verdict verdict = Verdict::kHolds;
  // For kEqualityStructural: |slack| <= tolerance. Always true otherwise.
  bool equality_consistent = true;
};

// Verdict is kViolation iff slack < -tolerance, else kEqualityStructural iff
// the graph classifies as extremal, else kHolds. Throws
// TransmissionRegularGraph when the hypothesis is unmet and InvalidArgument
// for alpha = 1.
BoundCheck check_bound(const Graph& g, Alpha alpha, double tol = kDefaultTolerance);
BoundCheck check_bound(const GraphAnalysis& a, Alpha alpha, double tol = kDefaultTolerance);

enum class CheckStatus { kPassed, kFailed, kSkipped };

std::string_view to_string(CheckStatus s);

struct InvariantCheck {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  double measured = 0.0;
  double expected = 0.0;
  double deviation = 0.0;
  std::string note;
};

// Numeric consequences of the extremal argument, evaluated on one graph.
struct InvariantReport {
  InvariantCheck sandwich;         // Tr_min <= mu <= Tr_max
  InvariantCheck parity_identity;  // n Tr_max - 2W = rho_n (extremal only)
  InvariantCheck perron_ratio;     // x_max / x_min = 1 / (1 - tau_n) (extremal only)
  InvariantCheck diam2_identity;   // Tr_y = d(y) + 2(n-1-d(y)) (diameter <= 2 only)
  InvariantCheck trmax_structure;  // Tr_min = n-1, Tr_max = n-1+rho_n (extremal only)
  InvariantCheck hub_degrees;      // non-hub degrees = n-1-rho_n (extremal only)

  std::array<const InvariantCheck*, 6> all() const {
    return {&sandwich, &parity_identity, &perron_ratio,
            &diam2_identity, &trmax_structure, &hub_degrees};
  }
  bool ok() const;
};

// Never throws for connected input with alpha < 1; inapplicable checks are
// reported as kSkipped.
InvariantReport check_proof_invariants(const Graph& g, Alpha alpha);
InvariantReport check_proof_invariants(const GraphAnalysis& a, Alpha alpha);

}  // namespace dalpha

#endif  // DALPHA_CHECK_HPP_
