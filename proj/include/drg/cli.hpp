// Copyright 2026 The drgkit Authors.
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

#ifndef DRG_CLI_HPP_
#define DRG_CLI_HPP_

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "drg/classifier.hpp"
#include "drg/cliques.hpp"
#include "drg/dual.hpp"
#include "drg/error.hpp"
#include "drg/generators.hpp"
#include "drg/geometry.hpp"
#include "drg/graph.hpp"
#include "drg/graph_io.hpp"
#include "drg/serialize.hpp"
#include "drg/motion.hpp"
#include "drg/params.hpp"
#include "drg/scan.hpp"
#include "drg/spectral.hpp"

namespace drg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitNotApplicable = 2,
  kExitContradiction = 3,
};

inline constexpr const char* kMaxGroupEnv = "DRG_MAX_GROUP";

/// Parsed command line. Size flags are optional so that "not given" and
/// "given as 0" stay distinguishable.
struct Options {
  std::string subcommand;
  std::string family;
  std::optional<int> s, d, doob_t, doob_l;
  std::string input;
  std::string array;
  std::optional<double> epsilon, eta;
  std::optional<std::int64_t> m_d;
  std::optional<std::int64_t> max_group;
  std::string format = "json";
  std::string output;
  std::optional<std::int64_t> k_max;
  std::int64_t m_max = 200;
};

/// Flat rows for CSV output.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json doc;
  Table table;
  /// Scan emits one record per array instead of a single document.
  std::vector<Json> records;
  bool streamed = false;
  int status = kExitOk;
};

namespace detail {

inline std::string cell(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

inline std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& out, const Table& table) {
  const auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

/// key = value lines with dotted object paths and [i] array indices.
inline void flatten(std::ostream& out, const Json& value, const std::string& path) {
  if (value.is_object() && !value.empty()) {
    for (const auto& [key, child] : value.items()) {
      flatten(out, child, path.empty() ? key : path + "." + key);
    }
  } else if (value.is_array() && !value.empty()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      flatten(out, value[i], path + "[" + std::to_string(i) + "]");
    }
  } else {
    out << path << " = " << cell(value) << '\n';
  }
}

inline std::string str(double value) { return cell(Json(value)); }

inline void write_report(std::ostream& out, const Report& report, const std::string& format) {
  if (format == "csv") {
    write_csv(out, report.table);
  } else if (format == "text") {
    if (report.streamed) {
      for (std::size_t i = 0; i < report.records.size(); ++i) {
        if (i) out << '\n';
        flatten(out, report.records[i], "");
      }
    } else {
      flatten(out, report.doc, "");
    }
  } else if (report.streamed) {
    for (const auto& record : report.records) out << record.dump() << '\n';
  } else {
    out << report.doc.dump(2) << '\n';
  }
}

/// An input that the analysis does not apply to: reported, exit status 2.
struct NotApplicable {
  std::string reason;
};

struct Input {
  Json source;
  std::optional<Graph> graph;
  std::optional<GeneratorSpec> spec;
  IntersectionArray array;
  bool has_array = false;
};

inline GeneratorSpec spec_from(const Options& o) {
  const auto family = parse_family(o.family);
  if (!family) {
    fail(ErrorKind::kParameter,
         "unknown family '" + o.family +
             "' (expected johnson, hamming, doob, shrikhande, cocktail-party, "
             "complete-bipartite-line, complete, cycle or petersen)");
  }
  GeneratorSpec spec;
  spec.family = *family;
  spec.s = o.s.value_or(0);
  spec.d = o.d.value_or(0);
  spec.doob_t = o.doob_t.value_or(0);
  spec.doob_l = o.doob_l.value_or(0);
  spec.validate();
  return spec;
}

/// Resolves the single input source; `need_graph` rejects --array.
inline Input resolve_input(const Options& o, bool need_graph) {
  const int given = (o.family.empty() ? 0 : 1) + (o.input.empty() ? 0 : 1) +
                    (o.array.empty() ? 0 : 1);
  if (given != 1) {
    fail(ErrorKind::kParameter, "exactly one of --family, --input, --array is required");
  }
  if (o.family.empty() && (o.s || o.d || o.doob_t || o.doob_l)) {
    fail(ErrorKind::kParameter, "--s, --d, --doob-t and --doob-l only apply with --family");
  }
  Input in;
  if (!o.family.empty()) {
    in.spec = spec_from(o);
    in.graph = generate(*in.spec);
    in.source = Json{{"type", "family"}, {"name", in.spec->name()}};
  } else if (!o.input.empty()) {
    in.graph = read_graph_file(o.input);
    in.source = Json{{"type", "file"}, {"path", o.input}};
  } else {
    if (need_graph) {
      fail(ErrorKind::kParameter, o.subcommand + " needs an explicit graph (--family or --input)");
    }
    in.array = array_from_json_text(o.array);
    in.has_array = true;
    in.source = Json{{"type", "array"}, {"array", in.array}};
  }
  return in;
}

/// Intersection array of the input; a graph that is not distance-regular is
/// not an error but a not-applicable result.
inline IntersectionArray array_of(Input& in) {
  if (in.has_array) return in.array;
  try {
    in.array = check_distance_regular(*in.graph);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kNotConnected:
      case ErrorKind::kNotRegular:
      case ErrorKind::kNotDistanceRegular:
        throw NotApplicable{e.what()};
      default:
        throw;
    }
  }
  in.has_array = true;
  return in.array;
}

inline CliqueGeometryReport geometry_of(const Input& in, const IntersectionArray& arr,
                                        const SpectralProfile& profile) {
  return in.graph ? detect_clique_geometry(*in.graph, arr, profile)
                  : infer_geometry_from_array(arr, profile);
}

/// Geometry without the clique list, which can be large.
inline Json geometry_summary(const CliqueGeometryReport& geometry) {
  Json j = geometry;
  j.erase("cliques");
  j["clique_count"] = geometry.cliques.size();
  return j;
}

inline std::int64_t resolve_max_group(const Options& o) {
  if (o.max_group) {
    require(*o.max_group >= 1, "--max-group must be at least 1");
    return *o.max_group;
  }
  if (const char* env = std::getenv(kMaxGroupEnv); env != nullptr && *env != '\0') {
    std::int64_t value = 0;
    std::size_t used = 0;
    try {
      value = std::stoll(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(env).size() || value < 1) {
      fail(ErrorKind::kParameter, std::string(kMaxGroupEnv) + " must be a positive integer");
    }
    return value;
  }
  return kDefaultMaxGroup;
}

inline ClassifierConfig config_from(const Options& o) {
  ClassifierConfig config;
  config.epsilon = o.epsilon;
  if (o.eta) config.eta_d = *o.eta;
  if (o.m_d) config.m_d = *o.m_d;
  config.validate();
  return config;
}

inline Json config_json(const ClassifierConfig& config, int d) {
  return Json{{"epsilon", config.effective_epsilon(std::max(d, 1))},
              {"epsilon_explicit", config.epsilon.has_value()},
              {"eta_d", config.eta_d},
              {"eps_d", config.eps_d},
              {"m_d", config.m_d},
              {"epsilon_star", config.epsilon_star}};
}

inline Json family_json(const IntersectionArray& arr) {
  const auto match = family_match(arr);
  return match.empty() ? Json(nullptr) : Json(match);
}

inline Table array_table(const IntersectionArray& arr) {
  Table t{{"i", "b", "c", "a", "k_i"}, {}};
  for (int i = 0; i <= arr.d(); ++i) {
    t.rows.push_back({std::to_string(i), std::to_string(arr.b(i)), std::to_string(arr.c(i)),
                      std::to_string(arr.a(i)), std::to_string(arr.k_i(i))});
  }
  return t;
}

inline Table spectrum_table(const SpectralProfile& p) {
  Table t{{"j", "eigenvalue", "multiplicity", "integral"}, {}};
  for (std::size_t j = 0; j < p.eigenvalues.size(); ++j) {
    t.rows.push_back({std::to_string(j), str(p.eigenvalues[j]), std::to_string(p.multiplicities[j]),
                      p.integral[j] ? "true" : "false"});
  }
  return t;
}

inline Table checklist_table(const std::vector<InequalityReport>& list) {
  Table t{{"name", "applicable", "holds", "lhs", "rhs", "slack"}, {}};
  for (const auto& r : list) {
    t.rows.push_back({r.name, r.applicable ? "true" : "false", r.holds ? "true" : "false",
                      str(r.lhs), str(r.rhs), str(r.slack)});
  }
  return t;
}

// ---- subcommands -----------------------------------------------------------

inline Report run_generate(const Options& o, std::ostream& out) {
  if (!o.input.empty() || !o.array.empty() || o.family.empty()) {
    fail(ErrorKind::kParameter, "generate takes --family (with its size flags) only");
  }
  const auto spec = spec_from(o);
  const Graph g = generate(spec);
  Report r;
  if (o.output.empty()) {
    // Bare edge list on stdout so that `drg generate ... > file.g` works.
    write_graph(out, g);
    r.status = -1;
    return r;
  }
  write_graph_file(o.output, g);
  const auto degree = g.regular_degree();
  r.doc = Json{{"kind", "graph"},
               {"name", spec.name()},
               {"n", g.order()},
               {"edges", g.edge_count()},
               {"regular_degree", degree ? Json(*degree) : Json(nullptr)},
               {"path", o.output}};
  r.table = Table{{"name", "n", "edges", "path"},
                  {{spec.name(), std::to_string(g.order()), std::to_string(g.edge_count()),
                    o.output}}};
  return r;
}

inline Report run_analyze(const Options& o) {
  Input in = resolve_input(o, false);
  const auto arr = array_of(in);
  const bool quadrangle = in.graph && find_induced_quadrangle(*in.graph).has_value();
  const auto basic = basic_inequalities(arr, quadrangle);
  const auto feasibility = feasibility_check(arr);
  const auto profile = eigen_solve(arr);
  const auto geometry = geometry_of(in, arr, profile);
  Report r;
  r.doc = Json{{"kind", "analysis"},
               {"source", in.source},
               {"n", arr.n()},
               {"k", arr.k()},
               {"d", arr.d()},
               {"lambda", arr.lambda()},
               {"mu", arr.mu()},
               {"array", arr},
               {"layer_sizes", arr.layer_sizes()},
               {"induced_quadrangle", in.graph ? Json(quadrangle) : Json(nullptr)},
               {"basic_inequalities", basic},
               {"feasibility", feasibility},
               {"feasible", all_hold(feasibility)},
               {"spectrum", profile},
               {"geometry", geometry_summary(geometry)},
               {"geometric_identities", verify_geometric_identities(geometry, arr)},
               {"family_match", family_json(arr)}};
  r.table = array_table(arr);
  r.status = all_hold(feasibility) && all_hold(basic) ? kExitOk : kExitNotApplicable;
  return r;
}

inline Report run_spectrum(const Options& o) {
  Input in = resolve_input(o, false);
  const auto arr = array_of(in);
  const auto profile = eigen_solve(arr);
  const auto feasibility = feasibility_check(arr);
  Json closed = nullptr;
  if (in.spec && (in.spec->family == Family::kJohnson || in.spec->family == Family::kHamming)) {
    const auto expected = closed_form_spectrum(*in.spec);
    bool match = expected.eigenvalues.size() == profile.eigenvalues.size();
    for (std::size_t j = 0; match && j < profile.eigenvalues.size(); ++j) {
      match = std::fabs(expected.eigenvalues[j] - profile.eigenvalues[j]) <= kSnapTolerance &&
              expected.multiplicities[j] == profile.multiplicities[j];
    }
    closed = Json{{"eigenvalues", expected.eigenvalues},
                  {"multiplicities", expected.multiplicities},
                  {"matches", match}};
  }
  Json local = nullptr;
  if (in.graph) local = terwilliger_local_bounds(*in.graph, profile);
  Report r;
  r.doc = Json{{"kind", "spectrum"},
               {"source", in.source},
               {"array", arr},
               {"spectrum", profile},
               {"feasibility", feasibility},
               {"feasible", all_hold(feasibility)},
               {"closed_form", closed},
               {"local_bounds", local}};
  r.table = spectrum_table(profile);
  r.status = all_hold(feasibility) ? kExitOk : kExitNotApplicable;
  return r;
}

inline Report run_geometry(const Options& o) {
  Input in = resolve_input(o, false);
  const auto arr = array_of(in);
  const auto profile = eigen_solve(arr);
  const auto geometry = geometry_of(in, arr, profile);
  Json neighborhood = nullptr;
  Json local_line = nullptr;
  if (in.graph) {
    const auto nc = classify_neighborhood(*in.graph, geometry.is_geometric);
    neighborhood = Json{{"kind", std::string(to_string(nc.kind))},
                        {"uniform", nc.uniform},
                        {"cliques_per_vertex", nc.cliques_per_vertex},
                        {"clique_size", nc.clique_size}};
    if (geometry.is_geometric && geometry.m >= 1 && arr.k() % geometry.m == 0) {
      const auto verdict = local_line_graph_check(*in.graph, geometry.m);
      local_line = Json{{"all", verdict.all}, {"rows", verdict.rows}, {"cols", verdict.cols}};
    }
  }
  Json metsch = nullptr;
  if (geometry.m >= 1) metsch = metsch_criterion(arr, geometry.m);
  Report r;
  r.doc = Json{{"kind", "geometry"},
               {"source", in.source},
               {"array", arr},
               {"geometry", geometry},
               {"identities", verify_geometric_identities(geometry, arr)},
               {"neighborhood", neighborhood},
               {"local_line_graph", local_line},
               {"metsch", metsch}};
  Table t{{"i", "psi", "tau"}, {}};
  const std::size_t rows = std::max(geometry.psi.size(), geometry.tau.size());
  for (std::size_t i = 0; i < rows; ++i) {
    t.rows.push_back({std::to_string(i),
                      i < geometry.psi.size() ? std::to_string(geometry.psi[i]) : "",
                      i < geometry.tau.size() ? std::to_string(geometry.tau[i]) : ""});
  }
  r.table = std::move(t);
  r.status = geometry.is_geometric ? kExitOk : kExitNotApplicable;
  return r;
}

inline Report run_dual(const Options& o) {
  Input in = resolve_input(o, true);
  const auto arr = array_of(in);
  const auto profile = eigen_solve(arr);
  const auto geometry = detect_clique_geometry(*in.graph, arr, profile);
  if (!geometry.is_geometric) throw NotApplicable{"graph is not geometric: " + geometry.note};
  const auto dual = build_dual(*in.graph, geometry);
  Json root = nullptr;
  if (geometry.m == 2) {
    const auto rg = root_graph_m2(*in.graph, geometry);
    root = Json{{"n", rg.root.order()},
                {"edges", rg.root.edge_count()},
                {"line_graph_matches", true},
                {"edge_to_vertex", rg.edge_to_vertex}};
  }
  if (!o.output.empty()) {
    write_graph_file(o.output, dual.graph);
    std::ofstream sidecar(o.output + ".cliques.json");
    if (!sidecar) fail(ErrorKind::kParameter, "cannot write " + o.output + ".cliques.json");
    sidecar << dual_mapping_json(dual).dump(2) << '\n';
  }
  Report r;
  r.doc = Json{{"kind", "dual"},
               {"source", in.source},
               {"m", geometry.m},
               {"clique_count", geometry.cliques.size()},
               {"dual_order", dual.graph.order()},
               {"dual_edges", dual.graph.edge_count()},
               {"k_tilde", dual.k_tilde},
               {"lambda_tilde", dual.lambda_tilde},
               {"diameter", dual.diameter},
               {"spectrum_check", dual_spectrum_check(dual, profile, geometry.m)},
               {"root_graph", root},
               {"cliques", dual.clique_of_vertex},
               {"path", o.output.empty() ? Json(nullptr) : Json(o.output)}};
  Table t{{"dual_vertex", "members"}, {}};
  for (std::size_t i = 0; i < dual.clique_of_vertex.size(); ++i) {
    std::string members;
    for (Vertex v : dual.clique_of_vertex[i]) members += (members.empty() ? "" : " ") + std::to_string(v);
    t.rows.push_back({std::to_string(i), members});
  }
  r.table = std::move(t);
  return r;
}

inline Report run_motion(const Options& o) {
  Input in = resolve_input(o, true);
  const auto report = exact_motion(*in.graph, resolve_max_group(o));
  Report r;
  r.doc = Json{{"kind", "motion"}, {"source", in.source}};
  const Json body = report;
  for (const auto& [key, value] : body.items()) r.doc[key] = value;
  Table t{{"name", "value"}, {}};
  t.rows.push_back({"exact", report.exact && !report.rigid ? std::to_string(*report.exact) : ""});
  for (const auto& b : report.bounds) t.rows.push_back({b.name, str(b.value)});
  r.table = std::move(t);
  return r;
}

inline std::string family_note(const std::string& match, const IntersectionArray& arr) {
  if (match.empty()) return "no closed-form family has this array";
  if (match[0] == 'H' && arr.k() / arr.d() + 1 == 4) {
    return "array of " + match + "; Hamming or Doob: arrays alone cannot tell them apart";
  }
  if (match[0] == 'H') return "array of " + match + "; only the Hamming graph has it";
  return "array of " + match;
}

inline Report run_classify(const Options& o) {
  Input in = resolve_input(o, false);
  const auto config = config_from(o);
  const auto arr = array_of(in);
  const auto feasibility = feasibility_check(arr);
  const auto profile = eigen_solve(arr);
  const auto geometry = geometry_of(in, arr, profile);
  const auto max_group = resolve_max_group(o);
  auto outcome = babai_case_analysis(arr, profile, geometry, in.graph ? &*in.graph : nullptr,
                                     config, max_group);
  const auto match = family_match(arr);
  const bool feasible = all_hold(feasibility);
  if (!feasible) outcome.notes.push_back("array fails feasibility; no graph realizes it");
  Report r;
  r.doc = Json{{"kind", "classification"},
               {"source", in.source},
               {"array", arr},
               {"config", config_json(config, arr.d())},
               {"feasible", feasible},
               {"feasibility", feasibility},
               {"family_match", match.empty() ? Json(nullptr) : Json(match)},
               {"family_note", family_note(match, arr)},
               {"outcome", outcome}};
  r.table = checklist_table(outcome.checklist);
  if (outcome.severity == Severity::kPaperContradiction) {
    r.status = kExitContradiction;
  } else if (!feasible || outcome.severity == Severity::kNotApplicable ||
             outcome.label == OutcomeLabel::kInconclusive) {
    r.status = kExitNotApplicable;
  }
  return r;
}

inline Json scan_record_json(const ScanRecord& rec) {
  return Json{{"kind", "scan_record"},
              {"array", rec.array},
              {"array_text", rec.array.to_string()},
              {"n", rec.array.n()},
              {"family_match", rec.family_match.empty() ? Json(nullptr) : Json(rec.family_match)},
              {"geometric", rec.geometry.is_geometric},
              {"m", rec.geometry.m},
              {"case_tag", rec.outcome.case_tag.empty() ? Json(nullptr) : Json(rec.outcome.case_tag)},
              {"label", std::string(to_string(rec.outcome.label))},
              {"label_text", rec.outcome.label_text()},
              {"motion_fraction", drg::detail::optional_json(rec.outcome.motion_fraction)},
              {"severity", std::string(to_string(rec.outcome.severity))}};
}

inline Report run_scan(const Options& o) {
  if (!o.family.empty() || !o.input.empty() || !o.array.empty()) {
    fail(ErrorKind::kParameter, "scan takes no input source");
  }
  if (!o.d || !o.k_max) fail(ErrorKind::kParameter, "scan needs --d and --k-max");
  require(*o.d >= 2, "scan needs --d >= 2");
  const auto config = config_from(o);
  Report r;
  r.streamed = true;
  r.table.header = {"array", "n", "family_match", "geometric", "case_tag", "label",
                    "motion_fraction", "severity"};
  scan_arrays(*o.d, *o.k_max, config, [&](const ScanRecord& rec) {
    r.records.push_back(scan_record_json(rec));
    const auto& j = r.records.back();
    r.table.rows.push_back({rec.array.to_string(), std::to_string(rec.array.n()),
                            rec.family_match, rec.geometry.is_geometric ? "true" : "false",
                            rec.outcome.case_tag, rec.outcome.label_text(),
                            j["motion_fraction"].is_null() ? "" : cell(j["motion_fraction"]),
                            std::string(to_string(rec.outcome.severity))});
    if (rec.outcome.severity == Severity::kPaperContradiction) r.status = kExitContradiction;
  });
  return r;
}

inline Report run_verify_appendix(const Options& o) {
  if (!o.family.empty() || !o.input.empty() || !o.array.empty()) {
    fail(ErrorKind::kParameter, "verify-appendix takes no input source");
  }
  require(o.m_max >= 2, "--m-max must be at least 2");
  const auto report = appendix_inequality_verify(o.m_max);
  Report r;
  r.doc = Json{{"kind", "appendix"}, {"m_max", o.m_max}};
  const Json body = report;
  for (const auto& [key, value] : body.items()) r.doc[key] = value;
  r.table = Table{{"m_max", "triples", "violations", "min_slack", "argmin_m", "argmin_x",
                   "argmin_t"},
                  {{std::to_string(o.m_max), std::to_string(report.triples),
                    std::to_string(report.violations), std::to_string(report.min_slack),
                    std::to_string(report.argmin_m), std::to_string(report.argmin_x),
                    std::to_string(report.argmin_t)}}};
  r.status = report.violations == 0 ? kExitOk : kExitContradiction;
  return r;
}

inline Report not_applicable_report(const Options& o, const std::string& reason) {
  Report r;
  r.doc = Json{{"kind", "not_applicable"}, {"subcommand", o.subcommand}, {"reason", reason}};
  r.table = Table{{"subcommand", "reason"}, {{o.subcommand, reason}}};
  r.status = kExitNotApplicable;
  return r;
}

inline void add_source_flags(CLI::App* sub, Options& o, bool with_array) {
  sub->add_option("--family", o.family, "graph family name");
  sub->add_option("--s", o.s, "family size parameter s");
  sub->add_option("--d", o.d, "family size parameter d");
  sub->add_option("--doob-t", o.doob_t, "Doob: number of K4 x K4 factors");
  sub->add_option("--doob-l", o.doob_l, "Doob: number of Shrikhande factors");
  sub->add_option("--input", o.input, "graph file (edge list)");
  if (with_array) sub->add_option("--array", o.array, "intersection array as JSON");
}

inline void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("-o", o.output, "output path");
}

inline void add_classifier_flags(CLI::App* sub, Options& o) {
  sub->add_option("--epsilon", o.epsilon, "case-analysis epsilon");
  sub->add_option("--eta", o.eta, "eta_d constant");
  sub->add_option("--m-d", o.m_d, "m_d constant");
}

}  // namespace detail

/// Runs one command line. Reports go to `out` (or the -o path), diagnostics
/// to `err`. Returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace detail;
  Options o;
  CLI::App app{"drgkit: distance-regular graph invariants and classification checks", "drg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* generate_cmd = app.add_subcommand("generate", "write a family graph as an edge list");
  add_source_flags(generate_cmd, o, false);
  add_output_flags(generate_cmd, o);

  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"analyze", "intersection array, feasibility, spectrum and geometry summary"},
           {"spectrum", "eigenvalues, multiplicities and local eigenvalue bounds"},
           {"geometry", "Delsarte clique geometry and its parameters"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_source_flags(sub, o, true);
    add_output_flags(sub, o);
  }
  auto* dual_cmd = app.add_subcommand("dual", "dual graph on the Delsarte cliques");
  add_source_flags(dual_cmd, o, true);
  add_output_flags(dual_cmd, o);

  auto* motion_cmd = app.add_subcommand("motion", "exact motion and motion lower bounds");
  add_source_flags(motion_cmd, o, true);
  add_output_flags(motion_cmd, o);
  motion_cmd->add_option("--max-group", o.max_group, "automorphism enumeration cap");

  auto* classify_cmd = app.add_subcommand("classify", "walk the motion case analysis");
  add_source_flags(classify_cmd, o, true);
  add_output_flags(classify_cmd, o);
  add_classifier_flags(classify_cmd, o);
  classify_cmd->add_option("--max-group", o.max_group, "automorphism enumeration cap");

  auto* scan_cmd = app.add_subcommand("scan", "classify every feasible array up to a degree");
  scan_cmd->add_option("--d", o.d, "diameter")->required();
  scan_cmd->add_option("--k-max", o.k_max, "largest degree")->required();
  add_classifier_flags(scan_cmd, o);
  add_output_flags(scan_cmd, o);

  auto* appendix_cmd = app.add_subcommand("verify-appendix",
                                          "brute-force the auxiliary rational inequality");
  appendix_cmd->add_option("--m-max", o.m_max, "largest m")->capture_default_str();
  add_output_flags(appendix_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  for (const auto* sub : app.get_subcommands()) o.subcommand = sub->get_name();

  Report report;
  try {
    try {
      if (o.subcommand == "generate") {
        report = run_generate(o, out);
        if (report.status < 0) return kExitOk;
      } else if (o.subcommand == "analyze") {
        report = run_analyze(o);
      } else if (o.subcommand == "spectrum") {
        report = run_spectrum(o);
      } else if (o.subcommand == "geometry") {
        report = run_geometry(o);
      } else if (o.subcommand == "dual") {
        report = run_dual(o);
      } else if (o.subcommand == "motion") {
        report = run_motion(o);
      } else if (o.subcommand == "classify") {
        report = run_classify(o);
      } else if (o.subcommand == "scan") {
        report = run_scan(o);
      } else {
        report = run_verify_appendix(o);
      }
    } catch (const NotApplicable& na) {
      report = not_applicable_report(o, na.reason);
    }
  } catch (const Error& e) {
    err << "drg: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kInconsistency:
      case ErrorKind::kInternal:
        return kExitContradiction;
      default:
        return kExitInputError;
    }
  } catch (const std::exception& e) {
    err << "drg: " << e.what() << '\n';
    return kExitInputError;
  }

  // -o is the report path except where it names a graph file.
  const bool report_to_file =
      !o.output.empty() && o.subcommand != "generate" && o.subcommand != "dual";
  if (report_to_file) {
    std::ofstream file(o.output);
    if (!file) {
      err << "drg: cannot write " << o.output << '\n';
      return kExitInputError;
    }
    write_report(file, report, o.format);
  } else {
    write_report(out, report, o.format);
  }
  return report.status;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("drg");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace drg::cli

#endif  // DRG_CLI_HPP_
