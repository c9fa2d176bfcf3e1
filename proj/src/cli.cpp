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

#include "dalpha/cli.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dalpha/bounds.hpp"
#include "dalpha/check.hpp"
#include "dalpha/classify.hpp"
#include "dalpha/error.hpp"
#include "dalpha/families.hpp"
#include "dalpha/graph6.hpp"
#include "dalpha/matrix.hpp"
#include "dalpha/report.hpp"
#include "dalpha/sweep.hpp"
#include "json.hpp"

namespace dalpha::cli {
namespace {

using Json = nlohmann::ordered_json;

// Raised for bad flag values detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::string graph6;
  std::string file;
  std::string alpha_list = "0,0.25,0.5,0.75";
  double tol = kDefaultTolerance;
  std::string format = "text";
  int jobs = 0;
  std::string family;
  int n = 0;
  std::string parts;
  std::string base;
  bool family_only = false;
  bool spectral_only = false;
};

double default_tolerance() {
  if (const char* env = std::getenv(kToleranceEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
  }
  return kDefaultTolerance;
}

std::vector<double> parse_alphas(const std::string& csv, bool allow_one) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad alpha value '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad alpha value '" + item + "'");
    if (!(v >= 0.0 && v <= 1.0)) throw UsageError("alpha " + item + " outside [0,1]");
    if (!allow_one && v >= 1.0) {
      throw UsageError("alpha must lie in [0,1): the bound is stated for alpha in [0,1)");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty alpha list");
  return out;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Graph6Line> load_lines(const Config& c) {
  if (!c.graph6.empty()) return {{1, c.graph6}};
  if (c.file == "-") return read_graph6_lines(std::cin);
  std::ifstream in(c.file);
  if (!in) throw UsageError("cannot open " + c.file);
  return read_graph6_lines(in);
}

Graph decode(const Graph6Line& line) {
  try {
    return parse_graph6(line.text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.offset(), line.number);
  }
}

// Six decimals; values that round to zero print without a sign.
std::string f6(double x) { return fmt::format("{:.6f}", std::abs(x) < 5e-7 ? 0.0 : x); }

// ---- analyze -------------------------------------------------------------

struct AlphaRow {
  double alpha;
  SpectralResult spectrum;
  std::optional<BoundCheck> check;
};

int cmd_analyze(const Config& c, std::ostream& out) {
  if (c.graph6.empty() == c.file.empty()) {
    throw UsageError("analyze needs exactly one of --graph6 or --file");
  }
  const std::vector<double> alphas = parse_alphas(c.alpha_list, c.spectral_only);
  Json all = Json::array();
  std::string csv = "graph6,alpha,tr_max,mu_alpha,gap,bound,slack,class,verdict\n";
  for (const Graph6Line& line : load_lines(c)) {
    const Graph g = decode(line);
    if (!is_connected(g)) throw DisconnectedGraph();
    const GraphAnalysis a = analyze_structure(g);
    const TransmissionVector& t = a.transmissions;
    const bool regular = a.cls.tag == ClassTag::kTransmissionRegular;

    std::vector<AlphaRow> rows;
    for (double v : alphas) {
      const Alpha alpha(v);
      AlphaRow r{v, spectral_radius(build_d_alpha(a.distances, t, alpha)), std::nullopt};
      if (!c.spectral_only && !regular && g.order() >= 3) {
        r.check = check_bound(a, alpha, c.tol);
      }
      rows.push_back(std::move(r));
    }

    if (c.format == "json") {
      Json j;
      j["graph6"] = line.text;
      j["n"] = g.order();
      j["m"] = g.edge_count();
      j["degrees"] = degree_sequence(g);
      j["diameter"] = a.distances.diameter();
      j["transmissions"] = t.tr;
      j["tr_max"] = t.tr_max;
      j["tr_min"] = t.tr_min;
      j["wiener"] = t.wiener;
      j["class"] = to_string(a.cls);
      Json per = Json::array();
      for (const AlphaRow& r : rows) {
        Json e;
        e["alpha"] = r.alpha;
        e["mu_alpha"] = r.spectrum.mu;
        e["solver"] = std::string(to_string(r.spectrum.path));
        e["iterations"] = r.spectrum.iterations;
        e["residual"] = r.spectrum.residual;
        if (r.spectrum.perron) {
          const auto [lo, hi] =
              std::minmax_element(r.spectrum.perron->begin(), r.spectrum.perron->end());
          e["x_min"] = *lo;
          e["x_max"] = *hi;
        }
        e["gap"] = t.tr_max - r.spectrum.mu;
        if (r.check) {
          e["bound"] = r.check->bound;
          e["slack"] = r.check->slack;
          e["verdict"] = std::string(to_string(r.check->verdict));
        } else {
          e["verdict"] = "skipped";
        }
        per.push_back(std::move(e));
      }
      j["alphas"] = std::move(per);
      all.push_back(std::move(j));
      continue;
    }

    if (c.format == "csv") {
      for (const AlphaRow& r : rows) {
        const double bound = r.check ? r.check->bound : 0.0;
        const double g_ = t.tr_max - r.spectrum.mu;
        csv += fmt::format("{},{},{},{},{},{},{},\"{}\",{}\n", line.text, format_real(r.alpha),
                           t.tr_max, format_real(r.spectrum.mu), format_real(g_),
                           format_real(bound), format_real(g_ - bound), to_string(a.cls),
                           r.check ? to_string(r.check->verdict) : "skipped");
      }
      continue;
    }

    out << fmt::format("graph6         {}\n", line.text);
    out << fmt::format("n, m           {}, {}\n", g.order(), g.edge_count());
    out << fmt::format("degrees        [{}]\n", fmt::join(degree_sequence(g), ", "));
    out << fmt::format("diameter       {}\n", a.distances.diameter());
    out << fmt::format("transmissions  [{}]\n", fmt::join(t.tr, ", "));
    out << fmt::format("Tr_max {}  Tr_min {}  W {}\n", t.tr_max, t.tr_min, t.wiener);
    out << fmt::format("class          {}\n", to_string(a.cls));
    out << fmt::format("{:>8} {:>14} {:>10} {:>10} {:>12} {:>12} {:>12}  {}\n", "alpha",
                       "mu_alpha", "x_min", "x_max", "gap", "bound", "slack", "verdict");
    for (const AlphaRow& r : rows) {
      std::string xmin = "-";
      std::string xmax = "-";
      if (r.spectrum.perron) {
        const auto [lo, hi] =
            std::minmax_element(r.spectrum.perron->begin(), r.spectrum.perron->end());
        xmin = f6(*lo);
        xmax = f6(*hi);
      }
      const double g_ = t.tr_max - r.spectrum.mu;
      std::string bound = "-";
      std::string slack = "-";
      std::string verdict = regular ? "skipped (transmission regular)" : "skipped";
      if (r.check) {
        bound = f6(r.check->bound);
        slack = f6(r.check->slack);
        verdict = std::string(to_string(r.check->verdict));
      }
      out << fmt::format("{:>8} {:>14} {:>10} {:>10} {:>12} {:>12} {:>12}  {}\n", f6(r.alpha),
                         f6(r.spectrum.mu), xmin, xmax, f6(g_), bound, slack, verdict);
    }
  }
  if (c.format == "json") out << all.dump(2) << "\n";
  if (c.format == "csv") out << csv;
  return kExitOk;
}

// ---- generate ------------------------------------------------------------

int cmd_generate(const Config& c, std::ostream& out) {
  std::vector<Graph> graphs;
  const std::string& f = c.family;
  auto need_n = [&](int min) {
    if (c.n < min) throw UsageError("--family " + f + " needs --n >= " + std::to_string(min));
  };
  try {
    if (f == "extremal") {
      if (c.n < 3) throw UsageError("--family extremal needs n >= 3");
      graphs = extremal_family(c.n);
    } else if (f == "path") {
      need_n(1);
      graphs.push_back(make_family(family::Path{c.n}));
    } else if (f == "cycle") {
      need_n(3);
      graphs.push_back(make_family(family::Cycle{c.n}));
    } else if (f == "complete") {
      need_n(1);
      graphs.push_back(make_family(family::Complete{c.n}));
    } else if (f == "star") {
      need_n(1);
      graphs.push_back(make_family(family::Star{c.n}));
    } else if (f == "cocktail") {
      if (c.n < 2 || c.n % 2) throw UsageError("--family cocktail needs even n >= 2");
      graphs.push_back(make_cocktail_party(c.n / 2));
    } else if (f == "multipartite") {
      if (c.parts.empty()) throw UsageError("--family multipartite needs --parts");
      graphs.push_back(make_family(family::CompleteMultipartite{parse_ints(c.parts)}));
    } else if (f == "dvdr") {
      if (c.base.empty()) throw UsageError("--family dvdr needs --base GRAPH6");
      graphs.push_back(make_family(family::DvdrFromRegular{parse_graph6(c.base)}));
    } else {
      throw UsageError("unknown family '" + f + "'");
    }
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  for (const Graph& g : graphs) out << to_graph6(g) << "\n";
  return kExitOk;
}

// ---- sweep ---------------------------------------------------------------

SweepOptions sweep_options(const Config& c) {
  SweepOptions o;
  o.alphas = parse_alphas(c.alpha_list, false);
  o.tol = c.tol;
  o.jobs = c.jobs;
  return o;
}

SweepResult run_sweep(const Config& c, const SweepOptions& o) {
  if (c.file.empty()) throw UsageError("sweep needs --file PATH (or - for stdin)");
  if (c.file == "-") return sweep(std::cin, o);
  std::ifstream in(c.file);
  if (!in) throw UsageError("cannot open " + c.file);
  return sweep(in, o);
}

void print_sweep_text(const SweepReport& r, std::ostream& out) {
  out << fmt::format("order n = {}\n", r.n);
  out << fmt::format("graphs: {} total, {} connected, {} non-transmission-regular\n",
                     r.graphs_total, r.graphs_connected, r.graphs_nontransmission_regular);
  if (r.no_eligible_graphs()) {
    out << "no eligible graphs\n";
    return;
  }
  for (const AlphaSummary& s : r.per_alpha) {
    out << fmt::format("alpha {}  bound {}  min gap {}  min slack {}  argmin [{}]\n", f6(s.alpha),
                       f6(s.bound), f6(*s.min_gap), f6(*s.min_slack), fmt::join(s.argmin, " "));
  }
  out << fmt::format("equality set [{}]\n", fmt::join(r.equality_set, " "));
  out << fmt::format("violations {}\n", r.violations.size());
  for (const Violation& v : r.violations) {
    out << fmt::format("  {} alpha {} slack {:.3e}: {}\n", v.graph6, f6(v.alpha), v.slack,
                       v.reason);
  }
}

int cmd_sweep(const Config& c, std::ostream& out) {
  const SweepResult res = run_sweep(c, sweep_options(c));
  if (c.format == "json") {
    out << sweep_report_json(res.report);
  } else if (c.format == "csv") {
    out << sweep_records_csv(res.records);
  } else {
    print_sweep_text(res.report, out);
  }
  return res.report.violations.empty() ? kExitOk : kExitCheckFailed;
}

// ---- verify-theorem ------------------------------------------------------

struct CheckLog {
  std::vector<std::pair<bool, std::string>> entries;
  void add(bool ok, std::string what) { entries.emplace_back(ok, std::move(what)); }
  bool ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.first; });
  }
};

void verify_family(int n, const SweepOptions& o, CheckLog& log) {
  const std::vector<Graph> family = extremal_family(n);
  for (double v : o.alphas) {
    const Alpha alpha(v);
    try {
      const BoundParams p = bound_tau(n, alpha);
      log.add(true, fmt::format("alpha {}: tau_n = {:.12f} in (0,1), quadratic residual {:.1e}",
                                f6(v), p.tau, p.quadratic_residual));
    } catch (const Error& e) {
      log.add(false, fmt::format("alpha {}: {}", f6(v), e.what()));
    }
  }
  for (const Graph& g : family) {
    const std::string code = to_graph6(g);
    const GraphAnalysis a = analyze_structure(g);
    log.add(a.cls.extremal(), fmt::format("{} classifies as {}", code, to_string(a.cls)));
    for (double v : o.alphas) {
      const Alpha alpha(v);
      const BoundCheck b = check_bound(a, alpha, o.tol);
      const bool eq = b.verdict == Verdict::kEqualityStructural && b.equality_consistent;
      log.add(eq, fmt::format("{} alpha {}: gap {} bound {} slack {:.2e} {}", code, f6(v),
                              f6(b.gap), f6(b.bound), b.slack, to_string(b.verdict)));
      const InvariantReport inv = check_proof_invariants(a, alpha);
      for (const InvariantCheck* ch : inv.all()) {
        if (ch->status == CheckStatus::kSkipped) continue;
        log.add(ch->status == CheckStatus::kPassed,
                fmt::format("{} alpha {}: {} measured {} expected {} deviation {:.2e}", code,
                            f6(v), ch->name, format_real(ch->measured),
                            format_real(ch->expected), ch->deviation));
      }
    }
  }
}

std::map<std::string, int> signature_counts(const std::vector<GraphClass>& classes) {
  std::map<std::string, int> out;
  for (const GraphClass& c : classes) ++out[to_string(c)];
  return out;
}

int cmd_verify_theorem(const Config& c, std::ostream& out) {
  if (c.n < 3) throw UsageError("verify-theorem needs --n >= 3");
  if (c.family_only == !c.file.empty()) {
    throw UsageError("verify-theorem needs exactly one of --family-only or --file PATH");
  }
  const SweepOptions o = sweep_options(c);
  CheckLog log;
  verify_family(c.n, o, log);

  std::optional<SweepReport> report;
  if (!c.file.empty()) {
    const SweepResult res = run_sweep(c, o);
    report = res.report;
    const SweepReport& r = *report;
    if (r.n != c.n) {
      throw UsageError(fmt::format("enumeration has order {}, expected {}", r.n, c.n));
    }
    log.add(r.violations.empty(), fmt::format("sweep over {} graphs ({} eligible): {} violations",
                                              r.graphs_total,
                                              r.graphs_nontransmission_regular,
                                              r.violations.size()));
    for (const Violation& v : r.violations) {
      log.add(false, fmt::format("violation {} alpha {}: {}", v.graph6, f6(v.alpha), v.reason));
    }
    std::map<std::string, GraphClass> cls_of;
    for (const GraphRecord& rec : res.records) cls_of.emplace(rec.graph6, rec.cls);
    std::vector<GraphClass> found;
    for (const std::string& code : r.equality_set) found.push_back(cls_of.at(code));
    std::vector<GraphClass> expected;
    for (const Graph& g : extremal_family(c.n)) expected.push_back(classify(g));
    const bool same = signature_counts(found) == signature_counts(expected);
    log.add(same, fmt::format("equality set [{}] ({} graphs) matches the {} generated "
                              "extremal graphs",
                              fmt::join(r.equality_set, " "), r.equality_set.size(),
                              expected.size()));
    for (const AlphaSummary& s : r.per_alpha) {
      const bool subset = std::includes(r.equality_set.begin(), r.equality_set.end(),
                                        s.argmin.begin(), s.argmin.end());
      log.add(subset && !s.argmin.empty(),
              fmt::format("alpha {}: argmin [{}] lies in the equality set", f6(s.alpha),
                          fmt::join(s.argmin, " ")));
    }
  }

  if (c.format == "json") {
    Json j;
    j["n"] = c.n;
    j["passed"] = log.ok();
    Json checks = Json::array();
    for (const auto& [ok, what] : log.entries) checks.push_back({{"passed", ok}, {"check", what}});
    j["checks"] = std::move(checks);
    if (report) j["sweep"] = Json::parse(sweep_report_json(*report));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [ok, what] : log.entries) out << (ok ? "PASS " : "FAIL ") << what << "\n";
    out << (log.ok() ? "theorem checks passed" : "theorem checks FAILED") << "\n";
  }
  return log.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized distance spectral radius and Tr_max - mu_alpha bound checker",
               "dalpha"};
  app.require_subcommand(1);
  Config c;
  c.tol = default_tolerance();

  auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", c.alpha_list, "Comma-separated alpha values")
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", c.tol, std::string("Relative tolerance (env ") + kToleranceEnv + ")")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Spectral report for graph6 input");
  auto* g6 = analyze->add_option("--graph6", c.graph6, "Inline graph6 string");
  analyze->add_option("--file", c.file, "graph6 file, one graph per line (- for stdin)")
      ->excludes(g6);
  add_alpha(analyze);
  add_tol(analyze);
  add_format(analyze, {"text", "json", "csv"});
  analyze->add_flag("--spectral-only", c.spectral_only,
                    "Skip the bound check; allows alpha = 1");

  CLI::App* generate = app.add_subcommand("generate", "Emit family graphs as graph6");
  generate
      ->add_option("--family", c.family,
                   "extremal|path|cycle|complete|star|cocktail|multipartite|dvdr")
      ->required();
  generate->add_option("--n", c.n, "Order");
  generate->add_option("--parts", c.parts, "Part sizes for multipartite, e.g. 1,2,2");
  generate->add_option("--base", c.base, "Regular base graph (graph6) for dvdr");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Check the bound over a graph6 enumeration");
  sweep_cmd->add_option("--file", c.file, "graph6 file (- for stdin)")->required();
  add_alpha(sweep_cmd);
  add_tol(sweep_cmd);
  add_format(sweep_cmd, {"text", "json", "csv"});
  sweep_cmd->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify =
      app.add_subcommand("verify-theorem", "Check the bound and its equality cases at order n");
  verify->add_option("--n", c.n, "Order")->required();
  verify->add_option("--file", c.file, "Enumeration of all connected graphs of order n");
  verify->add_flag("--family-only", c.family_only, "Check only the generated extremal graphs");
  add_alpha(verify);
  add_tol(verify);
  add_format(verify, {"text", "json"});
  verify->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(c, out);
    if (generate->parsed()) return cmd_generate(c, out);
    if (sweep_cmd->parsed()) return cmd_sweep(c, out);
    if (verify->parsed()) return cmd_verify_theorem(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dalpha::cli
