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

#ifndef DALPHA_REPORT_HPP_
#define DALPHA_REPORT_HPP_

#include <span>
#include <string>

#include "dalpha/sweep.hpp"

namespace dalpha {

// Rounds to 15 significant digits, the precision used for JSON output.
double round_significant15(double x);

// "%.15g"
std::string format_real(double x);

// Sweep report as pretty-printed JSON with a fixed key order:
//   n, alphas, graphs_total, graphs_connected, graphs_nontransmission_regular,
//   min_slack (null when no graph was eligible), status, argmin (one entry per
//   alpha: alpha, bound, min_gap, min_slack, graphs, equality_set),
//   equality_set, violations (graph6, alpha, gap, bound, slack, reason).
std::string sweep_report_json(const SweepReport& report);

// One row per (connected graph, alpha):
//   graph6,alpha,tr_max,mu_alpha,gap,bound,slack,class,verdict
// Transmission-regular graphs carry verdict "skipped".
std::string sweep_records_csv(std::span<const GraphRecord> records);

}  // namespace dalpha

#endif  // DALPHA_REPORT_HPP_
