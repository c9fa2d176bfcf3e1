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

#include "dalpha/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "dalpha/error.hpp"
#include "dalpha/matrix.hpp"

namespace dalpha {
namespace {

InvariantCheck skipped(std::string name, std::string note) {
  InvariantCheck c;
  c.name = std::move(name);
  c.status = CheckStatus::kSkipped;
  c.note = std::move(note);
  return c;
}

InvariantCheck measured(std::string name, double value, double expected, double deviation,
                        bool pass) {
  InvariantCheck c;
  c.name = std::move(name);
  c.measured = value;
  c.expected = expected;
  c.deviation = deviation;
  c.status = pass ? CheckStatus::kPassed : CheckStatus::kFailed;
  return c;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "Holds";
    case Verdict::kEqualityStructural:
      return "EqualityStructural";
    case Verdict::kViolation:
      return "VIOLATION";
  }
  return "?";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPassed:
      return "pass";
    case CheckStatus::kFailed:
      return "FAIL";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

GraphAnalysis analyze_structure(const Graph& g) {
  DistanceMatrix d = apsp(g);
  TransmissionVector t = transmissions(d);
  GraphClass c = classify(g, t);
  return GraphAnalysis{g, std::move(d), std::move(t), std::move(c)};
}

BoundCheck check_bound(const Graph& g, Alpha alpha, double tol) {
  alpha.require_below_one();
  return check_bound(analyze_structure(g), alpha, tol);
}

BoundCheck check_bound(const GraphAnalysis& a, Alpha alpha, double tol) {
  alpha.require_below_one();
  if (a.cls.tag == ClassTag::kTransmissionRegular) throw TransmissionRegularGraph();

  BoundCheck b;
  b.alpha = alpha.value();
  b.tr_max = a.transmissions.tr_max;
  b.mu = spectral_radius(build_d_alpha(a.distances, a.transmissions, alpha)).mu;
  b.gap = b.tr_max - b.mu;
  b.bound = bound_tau(a.graph.order(), alpha).bound;
  b.slack = b.gap - b.bound;
  b.tolerance = bound_tolerance(tol, b.bound);
  if (b.slack < -b.tolerance) {
    b.verdict = Verdict::kViolation;
  } else if (a.cls.extremal()) {
    b.verdict = Verdict::kEqualityStructural;
    b.equality_consistent = std::abs(b.slack) <= b.tolerance;
  } else {
    b.verdict = Verdict::kHolds;
  }
  return b;
}

bool InvariantReport::ok() const {
  const auto checks = all();
  return std::none_of(checks.begin(), checks.end(), [](const InvariantCheck* c) {
    return c->status == CheckStatus::kFailed;
  });
}

InvariantReport check_proof_invariants(const Graph& g, Alpha alpha) {
  return check_proof_invariants(analyze_structure(g), alpha);
}

InvariantReport check_proof_invariants(const GraphAnalysis& a, Alpha alpha) {
  alpha.require_below_one();
  const int n = a.graph.order();
  const TransmissionVector& t = a.transmissions;
  const SpectralResult spectrum = spectral_radius(build_d_alpha(a.distances, t, alpha));
  InvariantReport r;

  {
    const double dev = std::max({0.0, t.tr_min - spectrum.mu, spectrum.mu - t.tr_max});
    const double tol = kDefaultTolerance * std::max(1.0, std::abs(spectrum.mu));
    r.sandwich = measured("sandwich", spectrum.mu, t.tr_max, dev, dev <= tol);
    r.sandwich.note = "Tr_min = " + std::to_string(t.tr_min) +
                      ", Tr_max = " + std::to_string(t.tr_max);
  }

  if (a.distances.diameter() <= 2) {
    int worst = 0;
    for (int y = 0; y < n; ++y) {
      const int deg = a.graph.degree(y);
      worst = std::max(worst, std::abs(t.tr[y] - (deg + 2 * (n - 1 - deg))));
    }
    r.diam2_identity = measured("diam2_identity", worst, 0, worst, worst == 0);
  } else {
    r.diam2_identity = skipped("diam2_identity", "diameter > 2");
  }

  if (!a.cls.extremal()) {
    const std::string why = "graph is not extremal";
    r.parity_identity = skipped("parity_identity", why);
    r.perron_ratio = skipped("perron_ratio", why);
    r.trmax_structure = skipped("trmax_structure", why);
    r.hub_degrees = skipped("hub_degrees", why);
    return r;
  }

  const BoundParams p = bound_tau(n, alpha);
  {
    const std::int64_t lhs = static_cast<std::int64_t>(n) * t.tr_max - 2 * t.wiener;
    const double dev = std::abs(static_cast<double>(lhs - p.rho));
    r.parity_identity = measured("parity_identity", static_cast<double>(lhs), p.rho, dev,
                                 lhs == p.rho);
  }
  {
    const double expected = 1.0 / (1.0 - p.tau);
    if (spectrum.perron) {
      const auto [lo, hi] = std::minmax_element(spectrum.perron->begin(), spectrum.perron->end());
      const double ratio = *hi / *lo;
      const double dev = std::abs(ratio - expected);
      r.perron_ratio = measured("perron_ratio", ratio, expected, dev, dev <= 1e-8);
    } else {
      r.perron_ratio = skipped("perron_ratio", "no Perron vector");
    }
  }
  {
    const int dev = std::abs(t.tr_min - (n - 1)) + std::abs(t.tr_max - (n - 1 + p.rho));
    r.trmax_structure = measured("trmax_structure", t.tr_max, n - 1 + p.rho, dev, dev == 0);
    r.trmax_structure.note = "Tr_min = " + std::to_string(t.tr_min) +
                             " (expected " + std::to_string(n - 1) + ")";
  }
  {
    int worst = 0;
    for (int v = 0; v < n; ++v) {
      if (v == a.cls.hub) continue;
      worst = std::max(worst, std::abs(a.graph.degree(v) - (n - 1 - p.rho)));
    }
    r.hub_degrees = measured("hub_degrees", n - 1 - p.rho + worst, n - 1 - p.rho, worst,
                             worst == 0);
  }
  return r;
}

}  // namespace dalpha
