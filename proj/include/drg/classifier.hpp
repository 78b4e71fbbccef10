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

#ifndef DRG_CLASSIFIER_HPP_
#define DRG_CLASSIFIER_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "drg/cliques.hpp"
#include "drg/dual.hpp"
#include "drg/error.hpp"
#include "drg/geometry.hpp"
#include "drg/graph.hpp"
#include "drg/motion.hpp"
#include "drg/params.hpp"
#include "drg/report.hpp"
#include "drg/spectral.hpp"

namespace drg {

/// Relaxation constant below which theta_1 + 1 > (1 - eps*) b_1 forces Johnson.
inline double default_epsilon_star() {
  static const double value = solve_vartheta(1e-13).epsilon_star;
  return value;
}

/// Constants of the classification. eta_d and eps_d stand in for constants
/// that are only known to exist; the defaults are conservative placeholders.
struct ClassifierConfig {
  std::optional<double> epsilon;
  double eta_d = 0.01;
  double eps_d = 0.01;
  std::int64_t m_d = 6;
  double epsilon_star = default_epsilon_star();

  void validate() const {
    require(!epsilon || *epsilon > 0.0, "epsilon must be positive");
    require(eta_d > 0.0 && eta_d <= 0.5, "eta_d must lie in (0, 1/2]");
    require(eps_d > 0.0, "eps_d must be positive");
    require(m_d >= 2, "m_d must be at least 2");
    require(epsilon_star > 0.0 && epsilon_star < 1.0, "epsilon_star must lie in (0, 1)");
  }

  /// The explicit epsilon, else 1/2 min(1/(6 m_d^4 d), eps_d).
  double effective_epsilon(int d) const {
    if (epsilon) return *epsilon;
    const double m4 = std::pow(static_cast<double>(m_d), 4);
    return 0.5 * std::min(1.0 / (6.0 * m4 * d), eps_d);
  }

  /// max(29, 2 m_d^3, 4 m_d / eta_d): below it the graph is small.
  double small_degree_cutoff() const {
    const double m = static_cast<double>(m_d);
    return std::max({29.0, 2.0 * m * m * m, 4.0 * m / eta_d});
  }

  double mu_one_cutoff() const {
    const double m = static_cast<double>(m_d);
    return std::max(4.0 * m / eta_d, m * m);
  }
};

enum class OutcomeLabel { kJohnson, kHamming, kDoobPossible, kMotionFraction, kInconclusive };

inline std::string_view to_string(OutcomeLabel label) {
  switch (label) {
    case OutcomeLabel::kJohnson: return "Johnson";
    case OutcomeLabel::kHamming: return "Hamming";
    case OutcomeLabel::kDoobPossible: return "DoobPossible";
    case OutcomeLabel::kMotionFraction: return "MotionFraction";
    case OutcomeLabel::kInconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

enum class Severity { kOk, kNotApplicable, kPaperContradiction };

inline std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::kOk: return "ok";
    case Severity::kNotApplicable: return "not-applicable";
    case Severity::kPaperContradiction: return "paper-contradiction";
  }
  return "ok";
}

inline constexpr std::string_view kMismatchFlag = "theorem-hypothesis-vs-array mismatch";
inline constexpr std::string_view kGammaPrimeFlag = "gamma_d' omitted: no stated value";

struct ClassificationOutcome {
  OutcomeLabel label = OutcomeLabel::kInconclusive;
  /// Johnson(family_s, family_d) or Hamming(family_d, family_s).
  std::int64_t family_s = 0;
  int family_d = 0;
  std::optional<double> motion_fraction;
  std::string case_tag;
  std::optional<double> gamma_d;
  std::vector<InequalityReport> checklist;
  std::vector<std::string> flags;
  std::vector<std::string> notes;
  Severity severity = Severity::kOk;

  std::string label_text() const {
    std::ostringstream out;
    switch (label) {
      case OutcomeLabel::kJohnson: out << "Johnson(" << family_s << "," << family_d << ")"; break;
      case OutcomeLabel::kHamming: out << "Hamming(" << family_d << "," << family_s << ")"; break;
      case OutcomeLabel::kDoobPossible:
        out << "DoobPossible(" << family_d << "," << family_s << ")";
        break;
      case OutcomeLabel::kMotionFraction:
        out << "MotionFraction(";
        if (motion_fraction) out << *motion_fraction; else out << "unknown";
        out << ")";
        break;
      case OutcomeLabel::kInconclusive: out << "Inconclusive"; break;
    }
    return out.str();
  }

  bool hypotheses_hold() const { return all_hold(checklist); }
};

namespace detail {

inline constexpr double kRelTolerance = 1e-12;

inline double tolerance_for(double rhs) { return kRelTolerance * std::max(1.0, std::fabs(rhs)); }

/// Non-strict comparisons tolerate rounding in products such as (1/(s-1)) * 3(s-1).
inline InequalityReport check_le(std::string name, double lhs, double rhs) {
  auto r = InequalityReport::at_most(std::move(name), lhs, rhs);
  if (!r.holds && lhs - rhs <= tolerance_for(rhs)) {
    r.holds = true;
    r.slack = 0.0;
  }
  return r;
}

inline InequalityReport check_ge(std::string name, double lhs, double rhs) {
  auto r = InequalityReport::at_least(std::move(name), lhs, rhs);
  if (!r.holds && rhs - lhs <= tolerance_for(rhs)) {
    r.holds = true;
    r.slack = 0.0;
  }
  return r;
}

inline InequalityReport check_true(std::string name, bool value, std::string note = {}) {
  auto r = InequalityReport::equal(std::move(name), value ? 1.0 : 0.0, 1.0);
  r.note = std::move(note);
  return r;
}

inline bool le(double lhs, double rhs) { return lhs <= rhs + tolerance_for(rhs); }

/// Largest t in [lo, d] with c_t <= eps k and b_t <= eps k.
inline std::optional<int> dominant_distance(const IntersectionArray& arr, double eps, int lo = 1) {
  const double bound = eps * static_cast<double>(arr.k());
  for (int t = arr.d(); t >= lo; --t) {
    if (le(static_cast<double>(arr.c(t)), bound) && le(static_cast<double>(arr.b(t)), bound)) {
      return t;
    }
  }
  return std::nullopt;
}

/// Largest t in [1, d] with c_t <= eps k.
inline std::optional<int> small_c_index(const IntersectionArray& arr, double eps) {
  const double bound = eps * static_cast<double>(arr.k());
  for (int t = arr.d(); t >= 1; --t) {
    if (le(static_cast<double>(arr.c(t)), bound)) return t;
  }
  return std::nullopt;
}

inline bool realized(const IntersectionArray& arr, const CliqueGeometryReport& geometry) {
  return arr.realized() || geometry.source == GeometrySource::kGraph;
}

/// A conclusion that fails under satisfied hypotheses is a contradiction only
/// for a graph; for a bare array it proves no graph has that array.
inline void record_mismatch(ClassificationOutcome& out, const IntersectionArray& arr,
                            const CliqueGeometryReport& geometry, const std::string& what) {
  out.label = OutcomeLabel::kInconclusive;
  out.flags.emplace_back(kMismatchFlag);
  if (realized(arr, geometry)) {
    out.severity = Severity::kPaperContradiction;
    out.notes.push_back("hypotheses hold on a realized graph but " + what);
  } else {
    out.notes.push_back("hypotheses hold but " + what + "; no graph realizes this array");
  }
}

inline double m_power(const CliqueGeometryReport& geometry, int power) {
  return std::pow(static_cast<double>(geometry.m), power);
}

}  // namespace detail

/// Johnson characterization: mu >= 2, theta_1 + 1 > (1 - eps*) b_1,
/// k >= max(m^3, 29) and connected neighborhoods give J(k/d + d, d).
inline ClassificationOutcome johnson_hypotheses(const IntersectionArray& arr,
                                                const SpectralProfile& profile,
                                                const CliqueGeometryReport& geometry,
                                                const ClassifierConfig& config) {
  using namespace detail;
  ClassificationOutcome out;
  auto& list = out.checklist;
  list.push_back(check_true("geometric", geometry.is_geometric, geometry.note));
  list.push_back(check_ge("diameter_ge_2", arr.d(), 2));
  if (!all_hold(list)) {
    out.severity = Severity::kNotApplicable;
    return out;
  }
  const double k = static_cast<double>(arr.k());
  const double b1 = static_cast<double>(arr.b(1));
  list.push_back(check_ge("mu_ge_2", static_cast<double>(arr.mu()), 2));
  list.push_back(InequalityReport::at_least("theta1_plus_1_gt_relaxed_b1", profile.theta1() + 1.0,
                                            (1.0 - config.epsilon_star) * b1, true)
                     .with("epsilon_star", config.epsilon_star));
  list.push_back(check_ge("k_ge_max_m3_29", k, std::max(m_power(geometry, 3), 29.0))
                     .with("m", static_cast<double>(geometry.m)));
  list.push_back(check_ge("lambda_ge_3", static_cast<double>(arr.lambda()), 3)
                     .because("implied by k >= m^3 with lambda >= k/m - 1 and m >= 2"));
  list.push_back(check_true("connected_local",
                            geometry.neighborhood_kind == NeighborhoodKind::kConnectedLocal,
                            std::string(to_string(geometry.neighborhood_kind))));
  if (!all_hold(list)) {
    out.severity = Severity::kNotApplicable;
    return out;
  }
  const int d = arr.d();
  if (arr.k() % d != 0) {
    record_mismatch(out, arr, geometry, "k is not divisible by d");
    return out;
  }
  const std::int64_t s = arr.k() / d + d;
  bool matches = false;
  try {
    matches = s >= 2 * d + 1 && johnson_array(s, d) == arr;
  } catch (const Error&) {
    matches = false;
  }
  if (!matches) {
    record_mismatch(out, arr, geometry, "the array is not that of J(" + std::to_string(s) + "," +
                                            std::to_string(d) + ")");
    return out;
  }
  out.label = OutcomeLabel::kJohnson;
  out.family_s = s;
  out.family_d = d;
  return out;
}

/// For geometric graphs with disconnected neighborhoods (psi_1 = 1) and mu >= 3:
/// theta_1 + 1 <= 5 b_1 / 7. Also evaluates 2st/(s+t) <= b+ + 1 on induced
/// K_{s,t} witnesses, searched on `graph` when given and otherwise implied
/// by the geometric parameters.
inline std::vector<InequalityReport> mu_eigen_gate(const CliqueGeometryReport& geometry,
                                                   const SpectralProfile& profile,
                                                   const IntersectionArray& arr,
                                                   const Graph* graph = nullptr) {
  std::vector<InequalityReport> out;
  const bool disjoint_local = geometry.is_geometric && geometry.psi.size() > 1 &&
                              geometry.psi[1] == 1;
  if (arr.d() < 2 || !profile.b_plus) {
    out.push_back(InequalityReport::skipped("theta1_le_five_sevenths_b1", "diameter < 2"));
    return out;
  }
  if (!disjoint_local) {
    out.push_back(InequalityReport::skipped("theta1_le_five_sevenths_b1",
                                            "neighborhoods are not disjoint cliques (psi_1 != 1)"));
  } else if (arr.mu() < 3) {
    out.push_back(InequalityReport::skipped("theta1_le_five_sevenths_b1", "mu < 3"));
  } else {
    out.push_back(detail::check_le("theta1_le_five_sevenths_b1", profile.theta1() + 1.0,
                                   5.0 * static_cast<double>(arr.b(1)) / 7.0));
  }

  const double bound = *profile.b_plus + 1.0;
  const auto evaluate = [&](std::int64_t s, std::int64_t t, const std::string& source) {
    const double lhs = 2.0 * static_cast<double>(s * t) / static_cast<double>(s + t);
    out.push_back(detail::check_le("induced_bipartite_K" + std::to_string(s) + "_" +
                                       std::to_string(t),
                                   lhs, bound)
                      .with("s", static_cast<double>(s))
                      .with("t", static_cast<double>(t))
                      .because(source));
  };
  if (graph != nullptr) {
    for (const auto& [s, t] : {std::pair<int, int>{2, 2}, std::pair<int, int>{3, 2}}) {
      if (find_induced_complete_bipartite(*graph, s, t)) evaluate(s, t, "witness found in graph");
    }
  } else {
    if (arr.mu() >= 2) evaluate(2, 2, "quadrangle implied by mu >= 2");
    if (disjoint_local && geometry.tau.size() > 2 && geometry.tau[2] > 2) {
      evaluate(geometry.tau[2], 2, "K_{tau_2,2} implied by psi_1 = 1");
    }
  }
  return out;
}

/// With c_t <= eps k and eps < 1/m^2: tau_i < tau_{i+1} for 1 <= i <= t-2.
/// When t = d also checks (d-i)(1/m - eps) k <= b_i <= (m-i) k / m.
inline std::vector<InequalityReport> tau_monotonicity(const CliqueGeometryReport& geometry,
                                                      const IntersectionArray& arr,
                                                      double epsilon) {
  std::vector<InequalityReport> out;
  if (!geometry.is_geometric) {
    out.push_back(InequalityReport::skipped("tau_monotonicity", "not geometric"));
    return out;
  }
  if (arr.mu() < 2 || arr.d() < 2) {
    out.push_back(InequalityReport::skipped("tau_monotonicity", "needs mu >= 2 and d >= 2"));
    return out;
  }
  const double m = static_cast<double>(geometry.m);
  if (!(epsilon > 0.0 && epsilon < 1.0 / (m * m))) {
    out.push_back(InequalityReport::skipped("tau_monotonicity", "needs 0 < eps < 1/m^2"));
    return out;
  }
  const auto t = detail::small_c_index(arr, epsilon);
  if (!t) {
    out.push_back(InequalityReport::skipped("tau_monotonicity", "no t with c_t <= eps k"));
    return out;
  }
  if (*t <= 2) {
    out.push_back(InequalityReport::at_least("tau_monotonicity", *t, *t)
                      .with("t", *t)
                      .because("vacuous: t <= 2"));
    return out;
  }
  for (int i = 1; i <= *t - 2; ++i) {
    out.push_back(InequalityReport::at_least("tau_" + std::to_string(i + 1) + "_gt_tau_" +
                                                 std::to_string(i),
                                             static_cast<double>(geometry.tau_at(i + 1)),
                                             static_cast<double>(geometry.tau_at(i)), true)
                      .with("t", *t));
  }
  if (*t == arr.d()) {
    const double k = static_cast<double>(arr.k());
    const int d = arr.d();
    for (int i = 1; i <= d - 1; ++i) {
      const double b = static_cast<double>(arr.b(i));
      out.push_back(detail::check_ge("b_" + std::to_string(i) + "_lower_band", b,
                                     (d - i) * (1.0 / m - epsilon) * k));
      out.push_back(detail::check_le("b_" + std::to_string(i) + "_upper_band", b,
                                     (m - i) * k / m));
    }
  }
  return out;
}

/// u_j >= (1 - 3 m^2 eps)^(j-1) (m - tau_j)/(m - tau_j + j - 1) theta_1/k
/// for 1 <= j <= t-1. `t` = 0 picks the largest t with c_t <= eps k.
inline std::vector<InequalityReport> standard_sequence_lower_bounds(
    const SpectralProfile& profile, const CliqueGeometryReport& geometry,
    const IntersectionArray& arr, double epsilon, int t = 0) {
  std::vector<InequalityReport> out;
  const auto skip = [&](const std::string& why) {
    out.push_back(InequalityReport::skipped("standard_sequence_lower_bounds", why));
    return out;
  };
  if (!geometry.is_geometric || arr.d() < 2) return skip("needs a geometric array with d >= 2");
  const double m = static_cast<double>(geometry.m);
  const double k = static_cast<double>(arr.k());
  const double b1 = static_cast<double>(arr.b(1));
  const double theta1 = profile.theta1();
  if (arr.mu() < 2) return skip("mu < 2");
  if (!(epsilon > 0.0 && epsilon < 1.0 / (24.0 * m * m))) return skip("needs 0 < eps < 1/(24 m^2)");
  if (!detail::le((1.0 - epsilon) * b1, theta1)) return skip("theta_1 < (1 - eps) b_1");
  if (t == 0) t = detail::small_c_index(arr, epsilon).value_or(0);
  if (t < 2 || t > arr.d()) return skip("no 2 <= t <= d with c_t <= eps k");
  if (!detail::le(static_cast<double>(arr.c(t)), epsilon * k)) return skip("c_t > eps k");
  const auto& u = profile.standard_sequences.at(1);
  for (int j = 1; j <= t - 1; ++j) {
    const double tau = static_cast<double>(geometry.tau_at(j));
    const double bound = std::pow(1.0 - 3.0 * m * m * epsilon, j - 1) * (m - tau) /
                         (m - tau + j - 1) * theta1 / k;
    out.push_back(detail::check_ge("u_" + std::to_string(j), u.at(static_cast<std::size_t>(j)),
                                   bound)
                      .with("t", t));
  }
  return out;
}

struct MultiplicityVerdict {
  bool applicable = false;
  bool hypotheses_hold = false;
  /// "bounded" (f_1 <= k-1), "exceptional" (m = d = t, c_d = d) or "neither".
  std::string branch;
  double f1 = 0.0;
  int t = 0;
  bool contradiction = false;
  std::vector<InequalityReport> checklist;
  std::string note;
};

/// Either f_1 <= k - 1, or m = d, t = d and c_d = d. The branch is reported
/// even when the hypotheses fail; only a failure under them is a contradiction.
inline MultiplicityVerdict multiplicity_dichotomy(const SpectralProfile& profile,
                                                  const CliqueGeometryReport& geometry,
                                                  const IntersectionArray& arr, double epsilon,
                                                  int t = 0) {
  using namespace detail;
  MultiplicityVerdict v;
  if (!geometry.is_geometric || arr.d() < 2 || geometry.psi.size() < 2 || geometry.psi[1] != 1) {
    v.note = "needs a geometric array of diameter >= 2 with disjoint-clique neighborhoods";
    return v;
  }
  v.applicable = true;
  const double m = static_cast<double>(geometry.m);
  const double k = static_cast<double>(arr.k());
  const int d = arr.d();
  if (t == 0) t = dominant_distance(arr, epsilon, 2).value_or(d);
  require(t >= 2 && t <= d, "t must lie in [2, d]");
  v.t = t;
  auto& list = v.checklist;
  list.push_back(check_ge("mu_ge_2", static_cast<double>(arr.mu()), 2));
  list.push_back(check_le("c_t_le_eps_k", static_cast<double>(arr.c(t)), epsilon * k).with("t", t));
  list.push_back(check_le("b_t_le_eps_k", static_cast<double>(arr.b(t)), epsilon * k).with("t", t));
  list.push_back(check_ge("theta1_ge_relaxed_b1", profile.theta1(),
                          (1.0 - epsilon) * static_cast<double>(arr.b(1))));
  list.push_back(InequalityReport::at_most("epsilon_lt_bound", epsilon,
                                           1.0 / (6.0 * std::pow(m, 4) * d), true));
  v.hypotheses_hold = all_hold(list);
  v.f1 = profile.raw_multiplicities.at(1);
  if (v.f1 <= k - 1.0 + kSnapTolerance) {
    v.branch = "bounded";
  } else if (geometry.m == d && t == d && arr.c(d) == d) {
    v.branch = "exceptional";
  } else {
    v.branch = "neither";
  }
  v.contradiction = v.hypotheses_hold && v.branch == "neither";
  return v;
}

/// Hamming characterization: disjoint-clique neighborhoods, mu >= 2,
/// theta_1 >= (1-eps) b_1, c_t, b_t <= eps k for some t, eps < 1/(6 m^4 d)
/// give H(d, 1 + k/d). s = 4 with k < 6d is reported as DoobPossible.
inline ClassificationOutcome hamming_pipeline(const IntersectionArray& arr,
                                              const SpectralProfile& profile,
                                              const CliqueGeometryReport& geometry,
                                              const ClassifierConfig& config) {
  using namespace detail;
  ClassificationOutcome out;
  auto& list = out.checklist;
  list.push_back(check_true("geometric", geometry.is_geometric, geometry.note));
  list.push_back(check_ge("diameter_ge_2", arr.d(), 2));
  if (!all_hold(list)) {
    out.severity = Severity::kNotApplicable;
    return out;
  }
  const int d = arr.d();
  const double k = static_cast<double>(arr.k());
  const double m = static_cast<double>(geometry.m);
  const double eps = config.effective_epsilon(d);
  list.push_back(check_true("disjoint_cliques_local",
                            geometry.neighborhood_kind == NeighborhoodKind::kDisjointCliquesLocal,
                            std::string(to_string(geometry.neighborhood_kind))));
  list.push_back(check_ge("mu_ge_2", static_cast<double>(arr.mu()), 2));
  list.push_back(check_ge("theta1_ge_relaxed_b1", profile.theta1(),
                          (1.0 - eps) * static_cast<double>(arr.b(1)))
                     .with("epsilon", eps));
  const auto t = dominant_distance(arr, eps);
  list.push_back(check_true("dominant_distance", t.has_value(),
                            t ? "t = " + std::to_string(*t) : "no t with c_t, b_t <= eps k")
                     .with("epsilon_k", eps * k));
  list.push_back(InequalityReport::at_most("epsilon_lt_bound", eps,
                                           1.0 / (6.0 * std::pow(m, 4) * d), true));
  if (!all_hold(list)) {
    out.severity = Severity::kNotApplicable;
    return out;
  }
  if (*t >= 2) {
    const auto verdict = multiplicity_dichotomy(profile, geometry, arr, eps, *t);
    list.push_back(check_true("multiplicity_branch_exceptional", verdict.branch == "exceptional",
                              verdict.branch)
                       .with("f1", verdict.f1));
    if (verdict.contradiction) {
      out.severity = Severity::kPaperContradiction;
      out.notes.push_back("multiplicity dichotomy fails under its hypotheses");
    }
  }
  if (arr.k() % d != 0) {
    record_mismatch(out, arr, geometry, "k is not divisible by d");
    return out;
  }
  const std::int64_t s = 1 + arr.k() / d;
  if (!(hamming_array(d, s) == arr)) {
    record_mismatch(out, arr, geometry,
                    "the array is not that of H(" + std::to_string(d) + "," + std::to_string(s) + ")");
    return out;
  }
  out.family_d = d;
  out.family_s = s;
  if (s == 4 && arr.k() < 6 * d) {
    out.label = OutcomeLabel::kDoobPossible;
    out.notes.push_back("s = 4 and k < 6d: a Doob graph has the same array");
  } else {
    out.label = OutcomeLabel::kHamming;
  }
  return out;
}

/// Walks the motion case analysis A, B, C.1, C.2.{i,ii,iii}, C.3.{i,ii}.
/// `graph`, when given, is only used to cross-check a fraction against exact motion.
inline ClassificationOutcome babai_case_analysis(const IntersectionArray& arr,
                                                 const SpectralProfile& profile,
                                                 const CliqueGeometryReport& geometry,
                                                 const Graph* graph,
                                                 const ClassifierConfig& config,
                                                 std::int64_t max_group = kDefaultMaxGroup) {
  using namespace detail;
  config.validate();
  ClassificationOutcome out;
  const int d = arr.d();
  const double k = static_cast<double>(arr.k());
  const double eps = config.effective_epsilon(std::max(d, 1));
  const double cutoff = config.small_degree_cutoff();
  const double n_d = std::pow(cutoff, d) + 1.0;
  out.gamma_d = std::min({config.eta_d / 4.0, eps / std::max(d, 1), 2.0 / n_d, 1.0 / 16.0});
  out.flags.emplace_back(kGammaPrimeFlag);
  auto& list = out.checklist;
  list.push_back(check_ge("diameter_ge_2", d, 2).with("epsilon", eps));
  if (d < 2) {
    out.severity = Severity::kNotApplicable;
    out.notes.push_back("case analysis needs diameter >= 2");
    return out;
  }
  const auto fraction = [&](double value, std::string tag) {
    out.label = OutcomeLabel::kMotionFraction;
    out.motion_fraction = value;
    out.case_tag = std::move(tag);
  };

  const bool geometric_small = geometry.is_geometric && geometry.m <= config.m_d;
  list.push_back(check_true("geometric_with_m_le_m_d", geometric_small,
                            geometry.is_geometric ? "m = " + std::to_string(geometry.m)
                                                  : "not geometric"));
  if (!geometric_small) {
    out.label = OutcomeLabel::kMotionFraction;
    out.case_tag = "A";
    out.notes.push_back("motion >= gamma_d' n from the spectral-gap dichotomy");
    return out;
  }

  for (int t = 1; t <= d - 1; ++t) {
    const auto bound = distinguishing_bound(arr, eps, t);
    if (bound.hypothesis_holds) {
      list.push_back(check_true("distinguishing_index", true, "t = " + std::to_string(t))
                         .with("b_t", static_cast<double>(arr.b(t)))
                         .with("c_t_plus_1", static_cast<double>(arr.c(t + 1)))
                         .with("epsilon_k", eps * k));
      fraction(eps / d, "B");
      out.notes.push_back("distinguishing bound assumes a primitive graph");
      break;
    }
  }

  if (out.case_tag.empty()) {
    const auto t = dominant_distance(arr, eps);
    list.push_back(check_true("dominant_distance", t.has_value(),
                              t ? "t = " + std::to_string(*t) : "none")
                       .with("epsilon_k", eps * k));
    if (!t) {
      out.severity = Severity::kPaperContradiction;
      out.notes.push_back("neither case B nor case C applies");
      return out;
    }
    const auto mu = arr.mu();
    if (k < cutoff) {
      list.push_back(check_le("k_below_cutoff", k, cutoff));
      fraction(2.0 / n_d, "C.1");
    } else if (mu >= 2) {
      const double b1 = static_cast<double>(arr.b(1));
      if (profile.theta1() < (1.0 - eps) * b1 &&
          !detail::le((1.0 - eps) * b1, profile.theta1())) {
        list.push_back(InequalityReport::at_most("theta1_lt_relaxed_b1", profile.theta1(),
                                                 (1.0 - eps) * b1, true));
        fraction(eps / 4.0, "C.2.i");
      } else if (mu >= 3) {
        out.case_tag = "C.2.ii";
        auto johnson = johnson_hypotheses(arr, profile, geometry, config);
        const auto gate = mu_eigen_gate(geometry, profile, arr, graph);
        list.insert(list.end(), johnson.checklist.begin(), johnson.checklist.end());
        list.insert(list.end(), gate.begin(), gate.end());
        out.label = johnson.label;
        out.family_s = johnson.family_s;
        out.family_d = johnson.family_d;
        out.flags.insert(out.flags.end(), johnson.flags.begin(), johnson.flags.end());
        out.notes.insert(out.notes.end(), johnson.notes.begin(), johnson.notes.end());
        if (johnson.severity == Severity::kPaperContradiction) {
          out.severity = Severity::kPaperContradiction;
        } else if (johnson.label != OutcomeLabel::kJohnson) {
          if (realized(arr, geometry) && eps < config.epsilon_star) {
            out.severity = Severity::kPaperContradiction;
            out.notes.push_back("case C.2.ii on a graph must yield a Johnson graph");
          } else {
            out.notes.push_back("no graph realizes this array: case C.2.ii forces J(s,d)");
          }
        }
      } else {
        out.case_tag = "C.2.iii";
        auto hamming = hamming_pipeline(arr, profile, geometry, config);
        list.insert(list.end(), hamming.checklist.begin(), hamming.checklist.end());
        out.label = hamming.label;
        out.family_s = hamming.family_s;
        out.family_d = hamming.family_d;
        out.flags.insert(out.flags.end(), hamming.flags.begin(), hamming.flags.end());
        out.notes.insert(out.notes.end(), hamming.notes.begin(), hamming.notes.end());
        if (hamming.severity == Severity::kPaperContradiction) {
          out.severity = Severity::kPaperContradiction;
        } else if (hamming.label == OutcomeLabel::kInconclusive) {
          out.notes.push_back("Hamming hypotheses fail at this epsilon");
        }
      }
    } else if (k >= config.mu_one_cutoff()) {
      if (geometry.m >= 3) {
        fraction(config.eta_d / 4.0, "C.3.i");
      } else {
        fraction(1.0 / 16.0, "C.3.ii");
        std::int64_t s = 0, t_order = 0;
        if (is_generalized_polygon_array(arr, s, t_order) && t_order == 1) {
          const bool exists = feit_higman_feasible(2 * d, s, 1);
          out.notes.push_back("dual is a generalized " + std::to_string(2 * d) +
                              "-gon of order (1," + std::to_string(s) + ")" +
                              (exists ? "" : ", excluded by Feit-Higman"));
        } else {
          out.notes.push_back("dual is a Moore graph or a generalized 2d-gon of order (1," +
                              std::to_string(arr.k() / 2) + ")");
        }
        out.notes.push_back("motion(dual) >= motion(halved dual) recorded, not re-proved");
      }
    } else {
      out.severity = Severity::kPaperContradiction;
      out.notes.push_back("mu = 1 below the case C.3 degree cutoff but above the C.1 cutoff");
    }
  }

  if (graph != nullptr && out.motion_fraction && graph->order() <= 64) {
    const auto motion = exact_motion(*graph, max_group);
    if (motion.exact && !motion.rigid) {
      const double exact = static_cast<double>(*motion.exact) / graph->order();
      list.push_back(check_le("fraction_le_exact_motion", *out.motion_fraction, exact));
      const bool own_constants = out.case_tag != "A" && out.case_tag != "C.3.i";
      if (own_constants && !list.back().holds) out.severity = Severity::kPaperContradiction;
    }
  }
  return out;
}

struct AppendixReport {
  std::int64_t triples = 0;
  std::int64_t violations = 0;
  /// min over triples of (m-x)(m-1)^2(t-1) - (m-1)(m-x+t-2)^2.
  std::int64_t min_slack = 0;
  std::int64_t argmin_m = 0, argmin_x = 0, argmin_t = 0;
  InequalityReport report;
};

/// Exhausts 2 <= t <= x+1 <= m <= m_max in the cross-multiplied form
/// (m-x)(m-1)^2(t-1) >= (m-1)(m-x+t-2)^2, in exact integer arithmetic.
inline AppendixReport appendix_inequality_verify(std::int64_t m_max) {
  require(m_max >= 2, "m_max must be at least 2");
  require(m_max <= 20000, "m_max above 20000 would overflow 64-bit products");
  AppendixReport r;
  bool first = true;
  std::int64_t best_lhs = 0, best_rhs = 0;
  for (std::int64_t m = 2; m <= m_max; ++m) {
    for (std::int64_t x = 1; x <= m - 1; ++x) {
      for (std::int64_t t = 2; t <= x + 1; ++t) {
        const std::int64_t gap = m - x + t - 2;
        const std::int64_t lhs = (m - x) * (m - 1) * (m - 1) * (t - 1);
        const std::int64_t rhs = (m - 1) * gap * gap;
        const std::int64_t slack = lhs - rhs;
        ++r.triples;
        if (slack < 0) ++r.violations;
        if (first || slack < r.min_slack) {
          first = false;
          r.min_slack = slack;
          r.argmin_m = m;
          r.argmin_x = x;
          r.argmin_t = t;
          best_lhs = lhs;
          best_rhs = rhs;
        }
      }
    }
  }
  r.report = InequalityReport::at_least("appendix_inequality", static_cast<double>(best_lhs),
                                        static_cast<double>(best_rhs));
  r.report.holds = r.violations == 0;
  r.report.with("m", static_cast<double>(r.argmin_m))
      .with("x", static_cast<double>(r.argmin_x))
      .with("t", static_cast<double>(r.argmin_t))
      .with("triples", static_cast<double>(r.triples))
      .with("violations", static_cast<double>(r.violations));
  return r;
}

}  // namespace drg

#endif  // DRG_CLASSIFIER_HPP_
