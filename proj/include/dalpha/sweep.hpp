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

#ifndef DALPHA_SWEEP_HPP_
#define DALPHA_SWEEP_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dalpha/check.hpp"
#include "dalpha/classify.hpp"
#include "dalpha/graph.hpp"
#include "dalpha/graph6.hpp"

namespace dalpha {

struct SweepOptions {
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75};
  double tol = kDefaultTolerance;
  // Worker threads for the parallel kernel; 0 uses the OpenMP default.
  int jobs = 0;
};

// Outcome for one (graph, alpha) pair of a connected graph.
struct AlphaOutcome {
  double alpha = 0.0;
  int tr_max = 0;
  double mu = 0.0;
  double gap = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  // Empty for transmission-regular graphs, which the bound does not cover.
  std::optional<Verdict> verdict;
  bool equality_consistent = true;
};

struct GraphRecord {
  std::size_t line = 0;
  std::string graph6;
  bool connected = false;
  bool transmission_regular = false;
  GraphClass cls;
  std::vector<AlphaOutcome> outcomes;  // one per alpha; empty when disconnected

  bool eligible() const { return connected && !transmission_regular; }
};

struct AlphaSummary {
  double alpha = 0.0;
  double bound = 0.0;
  std::optional<double> min_gap;
  std::optional<double> min_slack;
  // Graphs within 1e-12 of min_gap, sorted by graph6 string.
  std::vector<std::string> argmin;
  std::vector<std::string> equality_set;
};

struct Violation {
  std::string graph6;
  double alpha = 0.0;
  double gap = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  std::string reason;
};

struct SweepReport {
  int n = 0;
  std::vector<double> alphas;
  std::size_t graphs_total = 0;
  std::size_t graphs_connected = 0;
  std::size_t graphs_nontransmission_regular = 0;
  std::optional<double> min_slack;  // over every alpha
  std::vector<AlphaSummary> per_alpha;
  std::vector<std::string> equality_set;  // sorted graph6 strings
  std::vector<Violation> violations;

  bool no_eligible_graphs() const { return graphs_nontransmission_regular == 0; }
};

struct SweepResult {
  SweepReport report;
  std::vector<GraphRecord> records;  // input order
};

// Parses a graph6 stream, rejecting parse failures (with line number) and
// mixed orders. Throws InvalidArgument for an empty stream.
struct ParsedInput {
  int n = 0;
  std::vector<Graph6Line> lines;
  std::vector<Graph> graphs;
};
ParsedInput parse_sweep_input(std::istream& in);

// Throws InvalidArgument for an empty grid, alpha outside [0,1), or tol <= 0.
void validate_sweep_options(const SweepOptions& options);

// Per-graph analysis. The OpenMP kernel and the serial reference return
// identical records; the kernel only distributes graphs across threads.
std::vector<GraphRecord> analyze_graphs(std::span<const Graph> graphs,
                                        std::span<const Graph6Line> lines,
                                        const SweepOptions& options);
std::vector<GraphRecord> analyze_graphs_serial(std::span<const Graph> graphs,
                                               std::span<const Graph6Line> lines,
                                               const SweepOptions& options);

GraphRecord analyze_one(const Graph& g, const Graph6Line& line, const SweepOptions& options);

// Deterministic reduction over records in input order.
SweepReport reduce_records(int n, std::span<const GraphRecord> records,
                           const SweepOptions& options);

SweepResult sweep(std::istream& in, const SweepOptions& options);
SweepResult sweep_serial(std::istream& in, const SweepOptions& options);

}  // namespace dalpha

#endif  // DALPHA_SWEEP_HPP_
