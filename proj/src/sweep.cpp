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

#include "dalpha/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>

#include "dalpha/bounds.hpp"
#include "dalpha/error.hpp"
#include "dalpha/matrix.hpp"

namespace dalpha {
namespace {

constexpr double kTieTolerance = 1e-12;

bool has_bound(int n) { return n >= 3; }

}  // namespace

void validate_sweep_options(const SweepOptions& options) {
  if (options.alphas.empty()) throw InvalidArgument("alpha grid is empty");
  for (double a : options.alphas) Alpha(a).require_below_one();
  if (!(options.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (options.jobs < 0) throw InvalidArgument("jobs must be >= 0");
}

ParsedInput parse_sweep_input(std::istream& in) {
  ParsedInput p;
  p.lines = read_graph6_lines(in);
  if (p.lines.empty()) throw InvalidArgument("graph6 input contains no graphs");
  p.graphs.reserve(p.lines.size());
  for (const auto& l : p.lines) {
    try {
      p.graphs.push_back(parse_graph6(l.text));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.offset(), l.number);
    }
    if (p.graphs.back().order() != p.graphs.front().order()) {
      throw InvalidArgument("line " + std::to_string(l.number) + ": graph of order " +
                            std::to_string(p.graphs.back().order()) +
                            " in a sweep of order " +
                            std::to_string(p.graphs.front().order()));
    }
  }
  p.n = p.graphs.front().order();
  return p;
}

GraphRecord analyze_one(const Graph& g, const Graph6Line& line, const SweepOptions& options) {
  GraphRecord r;
  r.line = line.number;
  r.graph6 = line.text;
  r.connected = is_connected(g);
  if (!r.connected) return r;

  const GraphAnalysis a = analyze_structure(g);
  r.cls = a.cls;
  r.transmission_regular = a.cls.tag == ClassTag::kTransmissionRegular;
  r.outcomes.reserve(options.alphas.size());
  for (double value : options.alphas) {
    const Alpha alpha(value);
    AlphaOutcome o;
    if (r.transmission_regular) {
      o.alpha = value;
      o.tr_max = a.transmissions.tr_max;
      o.mu = spectral_radius(build_d_alpha(a.distances, a.transmissions, alpha)).mu;
      o.gap = o.tr_max - o.mu;
      o.bound = has_bound(g.order()) ? bound_tau(g.order(), alpha).bound : 0.0;
      o.slack = o.gap - o.bound;
    } else {
      const BoundCheck b = check_bound(a, alpha, options.tol);
      o.alpha = b.alpha;
      o.tr_max = b.tr_max;
      o.mu = b.mu;
      o.gap = b.gap;
      o.bound = b.bound;
      o.slack = b.slack;
      o.verdict = b.verdict;
      o.equality_consistent = b.equality_consistent;
    }
    r.outcomes.push_back(o);
  }
  return r;
}

std::vector<GraphRecord> analyze_graphs_serial(std::span<const Graph> graphs,
                                               std::span<const Graph6Line> lines,
                                               const SweepOptions& options) {
  validate_sweep_options(options);
  std::vector<GraphRecord> out;
  out.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out.push_back(analyze_one(graphs[i], lines[i], options));
  }
  return out;
}

std::vector<GraphRecord> analyze_graphs(std::span<const Graph> graphs,
                                        std::span<const Graph6Line> lines,
                                        const SweepOptions& options) {
  validate_sweep_options(options);
  const long count = static_cast<long>(graphs.size());
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  std::vector<GraphRecord> out(graphs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 32) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = analyze_one(graphs[i], lines[i], options);
    } catch (...) {
#pragma omp critical(dalpha_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

SweepReport reduce_records(int n, std::span<const GraphRecord> records,
                           const SweepOptions& options) {
  SweepReport rep;
  rep.n = n;
  rep.alphas = options.alphas;
  rep.graphs_total = records.size();
  const std::size_t grid = options.alphas.size();
  rep.per_alpha.resize(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    rep.per_alpha[k].alpha = options.alphas[k];
    rep.per_alpha[k].bound = has_bound(n) ? bound_tau(n, Alpha(options.alphas[k])).bound : 0.0;
  }

  for (const GraphRecord& r : records) {
    if (!r.connected) continue;
    ++rep.graphs_connected;
    if (!r.eligible()) continue;
    ++rep.graphs_nontransmission_regular;

    bool numerically_tight_everywhere = true;
    for (std::size_t k = 0; k < grid; ++k) {
      const AlphaOutcome& o = r.outcomes[k];
      AlphaSummary& s = rep.per_alpha[k];
      if (!s.min_gap || o.gap < *s.min_gap) s.min_gap = o.gap;
      if (!s.min_slack || o.slack < *s.min_slack) s.min_slack = o.slack;
      const double tol = bound_tolerance(options.tol, o.bound);
      numerically_tight_everywhere = numerically_tight_everywhere && std::abs(o.slack) <= tol;

      if (o.verdict == Verdict::kEqualityStructural) s.equality_set.push_back(r.graph6);
      if (o.verdict == Verdict::kViolation) {
        rep.violations.push_back({r.graph6, o.alpha, o.gap, o.bound, o.slack,
                                  "gap below bound"});
      } else if (!o.equality_consistent) {
        rep.violations.push_back({r.graph6, o.alpha, o.gap, o.bound, o.slack,
                                  "extremal graph does not attain the bound"});
      }
    }
    if (numerically_tight_everywhere && !r.cls.extremal()) {
      const AlphaOutcome& o = r.outcomes.front();
      rep.violations.push_back({r.graph6, o.alpha, o.gap, o.bound, o.slack,
                                "attains the bound at every alpha without extremal "
                                "structure (" + to_string(r.cls) + ")"});
    }
  }

  for (std::size_t k = 0; k < grid; ++k) {
    AlphaSummary& s = rep.per_alpha[k];
    if (s.min_gap) {
      for (const GraphRecord& r : records) {
        if (r.eligible() && r.outcomes[k].gap <= *s.min_gap + kTieTolerance) {
          s.argmin.push_back(r.graph6);
        }
      }
    }
    std::sort(s.argmin.begin(), s.argmin.end());
    std::sort(s.equality_set.begin(), s.equality_set.end());
    if (s.min_slack && (!rep.min_slack || *s.min_slack < *rep.min_slack)) {
      rep.min_slack = s.min_slack;
    }
    if (s.equality_set != rep.per_alpha.front().equality_set) {
      rep.violations.push_back({"", s.alpha, 0.0, s.bound, 0.0,
                                "equality set differs from the one at alpha = " +
                                    std::to_string(rep.per_alpha.front().alpha)});
    }
  }
  rep.equality_set = rep.per_alpha.front().equality_set;
  return rep;
}

SweepResult sweep(std::istream& in, const SweepOptions& options) {
  validate_sweep_options(options);
  const ParsedInput p = parse_sweep_input(in);
  SweepResult out;
  out.records = analyze_graphs(p.graphs, p.lines, options);
  out.report = reduce_records(p.n, out.records, options);
  return out;
}

SweepResult sweep_serial(std::istream& in, const SweepOptions& options) {
  validate_sweep_options(options);
  const ParsedInput p = parse_sweep_input(in);
  SweepResult out;
  out.records = analyze_graphs_serial(p.graphs, p.lines, options);
  out.report = reduce_records(p.n, out.records, options);
  return out;
}

}  // namespace dalpha
