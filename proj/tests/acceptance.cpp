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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "drg/drg.hpp"
#include "oracles.hpp"

namespace {

using namespace drg;

/// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += ok ? 0 : 1;
  }
  void note(const std::string& text) { notes_ = text; }
  bool passed() const { return failed_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ - failed_ << "/" << checks_ << " checks";
    if (!notes_.empty()) out << "; " << notes_;
    for (const auto& f : failures_) out << "\n    " << f;
    return out.str();
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string j_name(std::int64_t s, int d) {
  return "J(" + std::to_string(s) + "," + std::to_string(d) + ")";
}
std::string h_name(int d, std::int64_t s) {
  return "H(" + std::to_string(d) + "," + std::to_string(s) + ")";
}

void parameter_oracles(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  for (int d = 1; d <= 4; ++d) {
    for (int s = 2 * d + 1; s <= 12; ++s) {
      const auto arr = check_distance_regular(johnson_graph(s, d));
      const auto [b, cs] = oracle::johnson_sequences(s, d);
      c.expect(arr.b_sequence() == b && arr.c_sequence() == cs, j_name(s, d));
    }
    for (int s = 2; s <= 8; ++s) {
      const auto arr = check_distance_regular(hamming_graph(d, s));
      const auto [b, cs] = oracle::hamming_sequences(d, s);
      c.expect(arr.b_sequence() == b && arr.c_sequence() == cs, h_name(d, s));
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s >= 60 s");
}

bool spectrum_matches(const SpectralProfile& got,
                      const std::vector<std::pair<std::int64_t, std::int64_t>>& want) {
  if (got.eigenvalues.size() != want.size()) return false;
  for (std::size_t j = 0; j < want.size(); ++j) {
    if (got.eigenvalues[j] != static_cast<double>(want[j].first) || !got.integral[j]) return false;
    if (got.multiplicities[j] != want[j].second) return false;
    if (got.raw_multiplicities[j] != static_cast<double>(want[j].second)) return false;
  }
  return true;
}

void spectrum_oracles(Check& c) {
  for (int d = 1; d <= 4; ++d) {
    for (int s = 2 * d + 1; s <= 12; ++s) {
      const auto solved = eigen_solve(johnson_array(s, d));
      const auto closed = closed_form_spectrum(GeneratorSpec::johnson(s, d));
      c.expect(spectrum_matches(solved, oracle::johnson_spectrum(s, d)), j_name(s, d) + " oracle");
      c.expect(solved.eigenvalues == closed.eigenvalues &&
                   solved.multiplicities == closed.multiplicities,
               j_name(s, d) + " closed_form_spectrum");
    }
    for (int s = 2; s <= 8; ++s) {
      const auto solved = eigen_solve(hamming_array(d, s));
      const auto closed = closed_form_spectrum(GeneratorSpec::hamming(d, s));
      c.expect(spectrum_matches(solved, oracle::hamming_spectrum(d, s)), h_name(d, s) + " oracle");
      c.expect(solved.eigenvalues == closed.eigenvalues &&
                   solved.multiplicities == closed.multiplicities,
               h_name(d, s) + " closed_form_spectrum");
    }
  }
  c.expect(exact_biggs_multiplicity(hamming_array(2, 3), 1) == oracle::Rational(4),
           "Biggs f_1 for H(2,3) is not exactly 4");
}

void constants(Check& c) {
  const auto r = solve_vartheta(1e-12);
  c.expect(std::fabs(r.vartheta_1 - (-2.006594)) < 1e-5,
           "vartheta_1 = " + std::to_string(r.vartheta_1));
  c.expect(r.epsilon_star > 0.00654 && r.epsilon_star < 0.00656,
           "epsilon* = " + std::to_string(r.epsilon_star));
  // Residual of theta^2 (theta^2 - 1)^2 (theta^2 - 3)(theta^2 - 4) = 1, evaluated here.
  const double t2 = r.vartheta_1 * r.vartheta_1;
  const double residual = t2 * (t2 - 1) * (t2 - 1) * (t2 - 3) * (t2 - 4) - 1.0;
  c.expect(std::fabs(residual) < 1e-8, "residual " + std::to_string(residual));
  c.expect(std::fabs(r.residual) < 1e-8, "reported residual " + std::to_string(r.residual));
  std::ostringstream note;
  note.precision(8);
  note << "vartheta_1 = " << r.vartheta_1 << ", epsilon* = " << r.epsilon_star;
  c.note(note.str());
}

void check_geometry(Check& c, const Graph& g, const std::string& name, int d,
                    const std::function<std::int64_t(int)>& psi,
                    const std::function<std::int64_t(int)>& tau) {
  const auto arr = check_distance_regular(g);
  const auto geo = detect_clique_geometry(g, arr, eigen_solve(arr));
  c.expect(geo.is_geometric && geo.m == d, name + " geometric with m = d");
  if (!geo.is_geometric) return;
  const auto counted = oracle::count_geometric_parameters(g, geo.cliques, arr.d());
  c.expect(counted.constant, name + " counted parameters not constant");
  for (int i = 0; i < arr.d(); ++i) {
    c.expect(geo.psi_at(i) == psi(i), name + " psi_" + std::to_string(i));
    c.expect(counted.psi[i] == psi(i), name + " counted psi_" + std::to_string(i));
  }
  for (int i = 1; i <= arr.d(); ++i) {
    c.expect(geo.tau_at(i) == tau(i), name + " tau_" + std::to_string(i));
    c.expect(counted.tau[i] == tau(i), name + " counted tau_" + std::to_string(i));
    c.expect(arr.c(i) == tau(i) * psi(i - 1), name + " c identity at " + std::to_string(i));
  }
  const std::int64_t line = arr.k() / d + 1;
  for (int i = 1; i < arr.d(); ++i) {
    c.expect(arr.b(i) == (d - tau(i)) * (line - psi(i)),
             name + " b identity at " + std::to_string(i));
  }
  c.expect(all_hold(verify_geometric_identities(geo, arr)), name + " library identities");
}

void geometry(Check& c) {
  for (int d = 2; d <= 3; ++d) {
    for (int s = 2; s <= 8; ++s) {
      check_geometry(c, hamming_graph(d, s), h_name(d, s), d, [](int) { return 1; },
                     [](int i) { return i; });
    }
    for (int s = 2 * d + 1; s <= 9; ++s) {
      check_geometry(c, johnson_graph(s, d), j_name(s, d), d, [](int i) { return i + 1; },
                     [](int i) { return i; });
    }
  }
}

void dual(Check& c) {
  const auto analyse = [](const Graph& g) {
    const auto arr = check_distance_regular(g);
    const auto profile = eigen_solve(arr);
    return std::make_tuple(arr, profile, detect_clique_geometry(g, arr, profile));
  };
  {
    const auto g = hamming_graph(2, 3);
    const auto [arr, profile, geo] = analyse(g);
    c.expect(oracle::isomorphic(build_dual(g, geo).graph, oracle::complete_bipartite(3, 3)),
             "dual of H(2,3) is not K_{3,3}");
  }
  {
    const auto g = johnson_graph(5, 2);
    const auto [arr, profile, geo] = analyse(g);
    c.expect(oracle::isomorphic(build_dual(g, geo).graph, complete_graph(5)),
             "dual of J(5,2) is not K_5");
  }
  int containment = 0;
  const std::vector<Graph> graphs = {hamming_graph(2, 3), hamming_graph(2, 5), hamming_graph(3, 4),
                                     hamming_graph(4, 4), johnson_graph(5, 2), johnson_graph(8, 2),
                                     johnson_graph(9, 3), johnson_graph(10, 3)};
  for (const auto& g : graphs) {
    const auto [arr, profile, geo] = analyse(g);
    const auto dual_graph = build_dual(g, geo);
    const auto report = dual_spectrum_check(dual_graph, profile, geo.m, 1e-6);
    if (report.applicable) {
      ++containment;
      c.expect(report.holds, g.label() + " dual spectrum containment");
    }
    if (geo.m == 2) {
      const auto rooted = root_graph_m2(g, geo);
      c.expect(oracle::relabel(line_graph(rooted.root), rooted.edge_to_vertex) == g,
               g.label() + " L(root) round trip");
    }
  }
  c.expect(containment >= 4, "too few graphs with k >= m^2");
}

struct MotionCase {
  Graph graph;
  std::int64_t motion;
  std::int64_t order;
};

std::vector<MotionCase> motion_cases() {
  return {{johnson_graph(5, 2), 6, 120},
          {johnson_graph(8, 2), 12, oracle::factorial(8)},
          {hamming_graph(2, 3), 6, 2 * oracle::factorial(3) * oracle::factorial(3)},
          {hamming_graph(2, 4), 8, 2 * oracle::factorial(4) * oracle::factorial(4)}};
}

void motion_exactness(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& mc : motion_cases()) {
    const auto r = exact_motion(mc.graph);
    c.expect(r.exact == mc.motion, mc.graph.label() + " motion");
    c.expect(r.group_order == mc.order, mc.graph.label() + " group order");
  }
  c.expect(seconds_since(start) < 300.0, "runtime >= 5 min");
}

void bound_soundness(Check& c) {
  int violations = 0;
  for (const auto& mc : motion_cases()) {
    const auto r = exact_motion(mc.graph);
    const auto arr = check_distance_regular(mc.graph);
    const auto profile = eigen_solve(arr);
    const double exact = static_cast<double>(mc.motion);
    const double mixing = mixing_lemma_bound(mc.graph.order(), arr.k(), profile.xi,
                                             max_common_neighbors(mc.graph));
    violations += mixing > exact ? 1 : 0;
    c.expect(mixing <= exact, mc.graph.label() + " mixing " + std::to_string(mixing));
    for (int j = 1; j < arr.d(); ++j) {
      for (double alpha : {0.05, 0.1, 0.25, 0.5, 1.0}) {
        const double value = distinguishing_bound(arr, alpha, j).value;
        violations += value > exact ? 1 : 0;
        c.expect(value <= exact, mc.graph.label() + " distinguishing " + std::to_string(value));
      }
    }
    for (const auto& b : r.bounds) {
      violations += b.value > exact + 1e-9 ? 1 : 0;
      c.expect(b.value <= exact + 1e-9, mc.graph.label() + " reported " + b.name);
    }
  }
  const auto j82 = check_distance_regular(johnson_graph(8, 2));
  const double mixing = mixing_lemma_bound(28, 12, eigen_solve(j82).xi, 6);
  c.expect(std::fabs(mixing - 14.0 / 3.0) < 1e-9, "J(8,2) mixing bound is not 14/3");
  c.note(std::to_string(violations) + " violations; J(8,2) mixing " + std::to_string(mixing) +
         " <= 12");
}

void hamming_pipeline_check(Check& c) {
  double slowest = 0.0;
  for (std::int64_t s : {1460, 1461, 1500, 2000, 4000, 10000}) {
    const auto start = std::chrono::steady_clock::now();
    const auto arr = hamming_array(3, s);
    const auto profile = eigen_solve(arr);
    const auto geo = infer_geometry_from_array(arr, profile);
    ClassifierConfig config;
    config.epsilon = 1.0 / static_cast<double>(s - 1);
    const auto out = hamming_pipeline(arr, profile, geo, config);
    const double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    c.expect(out.label == OutcomeLabel::kHamming && out.family_d == 3 && out.family_s == s,
             h_name(3, s) + " -> " + out.label_text());
    c.expect(out.hypotheses_hold(), h_name(3, s) + " checklist");
    c.expect(elapsed < 1.0, h_name(3, s) + " took " + std::to_string(elapsed) + " s");
  }
  c.note("epsilon = 1/(s-1); slowest " + std::to_string(slowest) + " s");
}

void johnson_pipeline_check(Check& c) {
  const ClassifierConfig config;
  for (std::int64_t s = 13; s <= 120; ++s) {
    const auto arr = johnson_array(s, 3);
    const auto profile = eigen_solve(arr);
    const auto geo = infer_geometry_from_array(arr, profile);
    const auto out = johnson_hypotheses(arr, profile, geo, config);
    c.expect(out.label == OutcomeLabel::kJohnson && out.family_s == s && out.family_d == 3,
             j_name(s, 3) + " -> " + out.label_text());
    c.expect(profile.theta1() + 1.0 > (1.0 - config.epsilon_star) * static_cast<double>(arr.b(1)),
             j_name(s, 3) + " eigenvalue gap");
  }
}

void multiplicity_and_no_contradiction(Check& c) {
  for (int d = 2; d <= 4; ++d) {
    for (int s = 2; s <= 8; ++s) {
      const auto arr = hamming_array(d, s);
      const auto profile = eigen_solve(arr);
      const auto geo = infer_geometry_from_array(arr, profile);
      const auto v = multiplicity_dichotomy(profile, geo, arr, 0.01);
      c.expect(v.applicable && v.branch == "exceptional" && geo.m == d && arr.c(d) == d,
               h_name(d, s) + " branch " + v.branch);
      c.expect(!v.contradiction, h_name(d, s) + " contradiction");
    }
  }
  int outcomes = 0;
  int contradictions = 0;
  for (double eps : {0.05, 0.1, 0.2}) {
    ClassifierConfig config;
    config.epsilon = eps;
    config.m_d = 3;
    config.eta_d = 0.5;
    for (int d : {2, 3}) {
      scan_arrays(d, d == 2 ? 30 : 18, config, [&](const ScanRecord& r) {
        ++outcomes;
        contradictions += r.outcome.severity == Severity::kPaperContradiction ? 1 : 0;
      });
    }
  }
  for (const auto& g : {johnson_graph(5, 2), johnson_graph(7, 2), hamming_graph(2, 3),
                        hamming_graph(3, 3), petersen_graph(), cycle_graph(8)}) {
    const auto arr = check_distance_regular(g);
    const auto profile = eigen_solve(arr);
    const auto geo = detect_clique_geometry(g, arr, profile);
    for (double eps : {0.05, 0.3}) {
      ClassifierConfig config;
      config.epsilon = eps;
      config.m_d = 2;
      config.eta_d = 0.5;
      ++outcomes;
      contradictions +=
          babai_case_analysis(arr, profile, geo, &g, config).severity ==
                  Severity::kPaperContradiction
              ? 1
              : 0;
    }
  }
  c.expect(contradictions == 0, std::to_string(contradictions) + " paper-contradiction events");
  c.note(std::to_string(outcomes) + " classifications, " + std::to_string(contradictions) +
         " contradictions");
}

void appendix(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = appendix_inequality_verify(200);
  const double elapsed = seconds_since(start);
  c.expect(r.violations == 0, std::to_string(r.violations) + " violations");
  c.expect(r.triples == oracle::binomial(201, 3), "triple count " + std::to_string(r.triples));
  c.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
  const auto small = oracle::appendix_brute_force(40);
  const auto mine = appendix_inequality_verify(40);
  c.expect(small.violations == mine.violations && small.triples == mine.triples,
           "disagrees with the rational oracle at m <= 40");
  c.note(std::to_string(r.triples) + " triples, min slack " + std::to_string(r.min_slack));
}

void terwilliger(Check& c) {
  std::vector<Graph> graphs = {shrikhande_graph(), petersen_graph(), doob_graph(0, 1),
                               doob_graph(1, 1), doob_graph(0, 2)};
  for (int d = 1; d <= 4; ++d) {
    for (int s = 2 * d + 1; oracle::binomial(s, d) <= 300; ++s) graphs.push_back(johnson_graph(s, d));
    for (int s = 2; oracle::power(s, d) <= 300; ++s) graphs.push_back(hamming_graph(d, s));
  }
  for (int pairs = 2; pairs <= 20; ++pairs) graphs.push_back(cocktail_party_graph(pairs));
  for (int n = 3; n <= 20; ++n) graphs.push_back(cycle_graph(n));
  for (int n = 2; n <= 20; ++n) graphs.push_back(complete_graph(n));
  int checked = 0;
  for (const auto& g : graphs) {
    if (g.order() > 300) continue;
    const auto profile = eigen_solve(check_distance_regular(g));
    for (const auto& r : terwilliger_local_bounds(g, profile, 1e-6)) {
      if (!r.applicable) continue;
      ++checked;
      c.expect(r.holds, g.label() + " " + r.name);
    }
  }
  c.note(std::to_string(graphs.size()) + " graphs, " + std::to_string(checked) + " bounds");
}

std::string capture(const std::string& command, int& status) {
  std::string output;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return output;
  }
  char buffer[4096];
  for (std::size_t got; (got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0;) {
    output.append(buffer, got);
  }
  status = ::pclose(pipe);
  return output;
}

void scanner_determinism(Check& c) {
  const std::string command = std::string(DRG_BINARY) + " scan --d 2 --k-max 12";
  int first_status = 0, second_status = 0;
  const auto first = capture(command, first_status);
  const auto second = capture(command, second_status);
  c.expect(first_status == 0 && second_status == 0, "scan exit status");
  c.expect(!first.empty() && first == second, "two runs differ");
  int lines = 0;
  std::vector<std::string> arrays;
  std::istringstream in(first);
  for (std::string line; std::getline(in, line);) {
    ++lines;
    const auto doc = Json::parse(line);
    arrays.push_back(doc.at("array_text").get<std::string>());
  }
  for (const auto& [name, text] : std::vector<std::pair<std::string, std::string>>{
           {"J(5,2)", "{6,2;1,4}"}, {"H(2,3)", "{4,2;1,2}"}, {"H(2,4)", "{6,3;1,2}"}}) {
    c.expect(std::find(arrays.begin(), arrays.end(), text) != arrays.end(), name + " missing");
  }
  c.note(std::to_string(lines) + " records, " + std::to_string(first.size()) + " bytes");
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "parameter-oracles", parameter_oracles},
      {2, "spectrum-oracles", spectrum_oracles},
      {3, "constants", constants},
      {4, "geometry", geometry},
      {5, "dual", dual},
      {6, "motion-exactness", motion_exactness},
      {7, "bound-soundness", bound_soundness},
      {8, "hamming-pipeline", hamming_pipeline_check},
      {9, "johnson-pipeline", johnson_pipeline_check},
      {10, "multiplicity-dichotomy", multiplicity_and_no_contradiction},
      {11, "appendix", appendix},
      {12, "terwilliger-local", terwilliger},
      {13, "scanner-determinism", scanner_determinism},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    std::printf("%s %2d %-24s (%.2f s) %s\n", check.passed() ? "PASS" : "FAIL", criterion.id,
                criterion.name.c_str(), elapsed, check.summary().c_str());
    std::fflush(stdout);
    failures += check.passed() ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
