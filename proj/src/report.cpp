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

#include "dalpha/report.hpp"

#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace dalpha {
namespace {

using Json = nlohmann::ordered_json;

Json real_or_null(const std::optional<double>& x) {
  return x ? Json(round_significant15(*x)) : Json(nullptr);
}

}  // namespace

double round_significant15(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string sweep_report_json(const SweepReport& report) {
  Json j;
  j["n"] = report.n;
  Json alphas = Json::array();
  for (double a : report.alphas) alphas.push_back(round_significant15(a));
  j["alphas"] = alphas;
  j["graphs_total"] = report.graphs_total;
  j["graphs_connected"] = report.graphs_connected;
  j["graphs_nontransmission_regular"] = report.graphs_nontransmission_regular;
  j["min_slack"] = real_or_null(report.min_slack);
  j["status"] = report.no_eligible_graphs() ? "no eligible graphs"
                : report.violations.empty() ? "ok"
                                            : "violations";
  Json argmin = Json::array();
  for (const AlphaSummary& s : report.per_alpha) {
    Json e;
    e["alpha"] = round_significant15(s.alpha);
    e["bound"] = round_significant15(s.bound);
    e["min_gap"] = real_or_null(s.min_gap);
    e["min_slack"] = real_or_null(s.min_slack);
    e["graphs"] = s.argmin;
    e["equality_set"] = s.equality_set;
    argmin.push_back(std::move(e));
  }
  j["argmin"] = std::move(argmin);
  j["equality_set"] = report.equality_set;
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(Json{{"graph6", v.graph6},
                              {"alpha", round_significant15(v.alpha)},
                              {"gap", round_significant15(v.gap)},
                              {"bound", round_significant15(v.bound)},
                              {"slack", round_significant15(v.slack)},
                              {"reason", v.reason}});
  }
  j["violations"] = std::move(violations);
  return j.dump(2) + "\n";
}

std::string sweep_records_csv(std::span<const GraphRecord> records) {
  std::string out = "graph6,alpha,tr_max,mu_alpha,gap,bound,slack,class,verdict\n";
  for (const GraphRecord& r : records) {
    if (!r.connected) continue;
    const std::string cls = to_string(r.cls);
    for (const AlphaOutcome& o : r.outcomes) {
      out += r.graph6;
      out += "," + format_real(o.alpha);
      out += "," + std::to_string(o.tr_max);
      for (double x : {o.mu, o.gap, o.bound, o.slack}) out += "," + format_real(x);
      // Class labels may contain commas.
      out += ",\"" + cls + "\",";
      out += o.verdict ? std::string(to_string(*o.verdict)) : std::string("skipped");
      out += '\n';
    }
  }
  return out;
}

}  // namespace dalpha
