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

#ifndef DRG_GEOMETRY_HPP_
#define DRG_GEOMETRY_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drg/cliques.hpp"
#include "drg/error.hpp"
#include "drg/graph.hpp"
#include "drg/params.hpp"
#include "drg/report.hpp"
#include "drg/spectral.hpp"

namespace drg {

/// Largest possible clique size 1 - k/theta_min of a distance-regular graph.
inline double delsarte_bound(double k, double theta_min) {
  require(theta_min < 0, "Delsarte bound needs a negative smallest eigenvalue");
  return 1.0 - k / theta_min;
}

enum class NeighborhoodKind { kConnectedLocal, kDisjointCliquesLocal, kOther };

inline std::string_view to_string(NeighborhoodKind kind) {
  switch (kind) {
    case NeighborhoodKind::kConnectedLocal: return "ConnectedLocal";
    case NeighborhoodKind::kDisjointCliquesLocal: return "DisjointCliquesLocal";
    case NeighborhoodKind::kOther: return "Other";
  }
  return "Other";
}

enum class GeometrySource { kGraph, kArray };

/// Delsarte clique geometry and its parameters.
///   psi[i]  = |{y in C : dist(x, y) = i}| for dist(x, C) = i
///   tau[i]  = |{C containing x : dist(y, C) = i - 1}| for dist(x, y) = i  (tau[0] unused)
struct CliqueGeometryReport {
  bool is_geometric = false;
  GeometrySource source = GeometrySource::kGraph;
  std::int64_t m = 0;
  std::int64_t delsarte_size = 0;
  double delsarte_value = 0.0;
  std::vector<VertexSet> cliques;
  std::vector<std::int64_t> psi;
  std::vector<std::int64_t> tau;
  NeighborhoodKind neighborhood_kind = NeighborhoodKind::kOther;
  std::string note;

  std::int64_t psi_at(int i) const { return psi.at(static_cast<std::size_t>(i)); }
  std::int64_t tau_at(int i) const { return tau.at(static_cast<std::size_t>(i)); }
};

struct NeighborhoodClassification {
  NeighborhoodKind kind = NeighborhoodKind::kOther;
  bool uniform = true;
  /// Clique count and size when every X(v) is a disjoint union of equal cliques.
  int cliques_per_vertex = 0;
  int clique_size = 0;
  std::vector<NeighborhoodKind> per_vertex;
};

namespace detail {

struct LocalShape {
  NeighborhoodKind kind = NeighborhoodKind::kOther;
  int cliques = 0;
  int clique_size = 0;
};

inline LocalShape local_shape(const Graph& local) {
  LocalShape shape;
  const auto components = connected_components(local);
  bool equal_cliques = !components.empty();
  for (const auto& comp : components) {
    if (comp.size() != components.front().size() || !is_clique(local, comp)) {
      equal_cliques = false;
      break;
    }
  }
  if (equal_cliques) {
    shape.kind = NeighborhoodKind::kDisjointCliquesLocal;
    shape.cliques = static_cast<int>(components.size());
    shape.clique_size = static_cast<int>(components.front().size());
  } else if (components.size() == 1) {
    shape.kind = NeighborhoodKind::kConnectedLocal;
  }
  return shape;
}

}  // namespace detail

/// Shape of every neighborhood graph; a union of equal cliques takes precedence
/// over connectivity, so a single clique counts as one disjoint clique.
/// With `claimed_geometric`, a mix of kinds raises kInconsistency.
inline NeighborhoodClassification classify_neighborhood(const Graph& g,
                                                        bool claimed_geometric = false) {
  NeighborhoodClassification out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto shape = detail::local_shape(neighborhood_subgraph(g, v).graph);
    out.per_vertex.push_back(shape.kind);
    if (v == 0) {
      out.kind = shape.kind;
      out.cliques_per_vertex = shape.cliques;
      out.clique_size = shape.clique_size;
    } else if (shape.kind != out.kind || shape.cliques != out.cliques_per_vertex ||
               shape.clique_size != out.clique_size) {
      out.uniform = false;
    }
  }
  if (!out.uniform) {
    if (claimed_geometric) {
      fail(ErrorKind::kInconsistency, "neighborhood graphs of a geometric graph have mixed kinds");
    }
    out.kind = NeighborhoodKind::kOther;
  }
  if (out.kind != NeighborhoodKind::kDisjointCliquesLocal) {
    out.cliques_per_vertex = 0;
    out.clique_size = 0;
  }
  return out;
}

namespace detail {

using EdgeIndex = std::map<std::pair<Vertex, Vertex>, int>;

// Exact cover of the edge set by cliques; `coverage[e]` lists cliques through edge e.
class CliqueExactCover {
 public:
  CliqueExactCover(const std::vector<VertexSet>& cliques, const EdgeIndex& edges,
                   std::int64_t node_budget)
      : cliques_(cliques), budget_(node_budget) {
    coverage_.resize(edges.size());
    clique_edges_.resize(cliques.size());
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      const auto& q = cliques[c];
      for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = i + 1; j < q.size(); ++j) {
          const int e = edges.at({q[i], q[j]});
          coverage_[e].push_back(static_cast<int>(c));
          clique_edges_[c].push_back(e);
        }
      }
    }
    covered_.assign(edges.size(), false);
  }

  /// Chosen clique indices, or nullopt when no cover exists or the budget ran out.
  std::optional<std::vector<int>> solve() {
    chosen_.clear();
    if (search()) return chosen_;
    return std::nullopt;
  }

  bool exhausted() const { return budget_ < 0; }

 private:
  bool search() {
    if (--budget_ < 0) return false;
    int best_edge = -1;
    std::size_t best_options = SIZE_MAX;
    for (std::size_t e = 0; e < covered_.size(); ++e) {
      if (covered_[e]) continue;
      std::size_t options = 0;
      for (int c : coverage_[e]) options += usable(c) ? 1 : 0;
      if (options < best_options) {
        best_options = options;
        best_edge = static_cast<int>(e);
        if (options == 0) break;
      }
    }
    if (best_edge < 0) return true;
    for (int c : coverage_[best_edge]) {
      if (!usable(c)) continue;
      for (int e : clique_edges_[c]) covered_[e] = true;
      chosen_.push_back(c);
      if (search()) return true;
      chosen_.pop_back();
      for (int e : clique_edges_[c]) covered_[e] = false;
      if (budget_ < 0) return false;
    }
    return false;
  }

  bool usable(int c) const {
    return std::none_of(clique_edges_[c].begin(), clique_edges_[c].end(),
                        [&](int e) { return covered_[e]; });
  }

  const std::vector<VertexSet>& cliques_;
  std::vector<std::vector<int>> coverage_;
  std::vector<std::vector<int>> clique_edges_;
  std::vector<bool> covered_;
  std::vector<int> chosen_;
  std::int64_t budget_;
};

inline void record_constant(std::vector<std::int64_t>& table, std::size_t index,
                            std::int64_t value, const std::string& what) {
  if (table.size() <= index) table.resize(index + 1, -1);
  if (table[index] < 0) {
    table[index] = value;
  } else if (table[index] != value) {
    fail(ErrorKind::kInconsistency, what + " is not constant: found " +
                                        std::to_string(table[index]) + " and " +
                                        std::to_string(value));
  }
}

}  // namespace detail

inline constexpr std::int64_t kExactCoverBudget = 2'000'000;

/// Looks for a partition of the edges into Delsarte cliques and, when one
/// exists, counts psi and tau over every (clique, vertex) and vertex pair.
inline CliqueGeometryReport detect_clique_geometry(const Graph& g, const IntersectionArray& arr,
                                                   const SpectralProfile& profile) {
  CliqueGeometryReport report;
  report.source = GeometrySource::kGraph;
  const double theta_min = profile.theta_min();
  report.delsarte_value = delsarte_bound(static_cast<double>(arr.k()), theta_min);
  const double rounded = std::round(report.delsarte_value);
  if (std::fabs(report.delsarte_value - rounded) > kSnapTolerance) {
    report.note = "Delsarte bound is not an integer";
    return report;
  }
  report.delsarte_size = static_cast<std::int64_t>(rounded);
  const int size = static_cast<int>(report.delsarte_size);

  std::vector<VertexSet> candidates;
  for (auto& clique : enumerate_maximal_cliques(g, size)) {
    if (static_cast<int>(clique.size()) == size) candidates.push_back(std::move(clique));
  }
  detail::EdgeIndex edges;
  for (const auto& e : g.edges()) edges.emplace(e, static_cast<int>(edges.size()));

  std::vector<int> cover_count(edges.size(), 0);
  for (const auto& q : candidates) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) ++cover_count[edges.at({q[i], q[j]})];
    }
  }
  if (std::any_of(cover_count.begin(), cover_count.end(), [](int c) { return c == 0; })) {
    report.note = "some edge lies in no Delsarte clique";
    return report;
  }
  if (std::all_of(cover_count.begin(), cover_count.end(), [](int c) { return c == 1; })) {
    report.cliques = std::move(candidates);
  } else {
    detail::CliqueExactCover cover(candidates, edges, kExactCoverBudget);
    const auto chosen = cover.solve();
    if (!chosen) {
      report.note = cover.exhausted() ? "exact-cover search budget exhausted"
                                      : "no partition of the edges into Delsarte cliques";
      return report;
    }
    for (int c : *chosen) report.cliques.push_back(candidates[c]);
    std::sort(report.cliques.begin(), report.cliques.end());
  }

  if (!profile.integral.back()) {
    fail(ErrorKind::kInconsistency,
         "a Delsarte clique geometry exists but the smallest eigenvalue is not an integer");
  }
  report.is_geometric = true;
  report.m = -static_cast<std::int64_t>(std::llround(theta_min));

  const int n = g.order();
  std::vector<std::vector<int>> cliques_of(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < report.cliques.size(); ++c) {
    for (Vertex v : report.cliques[c]) cliques_of[v].push_back(static_cast<int>(c));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<std::int64_t>(cliques_of[v].size()) != report.m) {
      fail(ErrorKind::kInconsistency,
           "vertex " + std::to_string(v) + " lies in " + std::to_string(cliques_of[v].size()) +
               " Delsarte cliques, expected m = " + std::to_string(report.m));
    }
  }

  const DistanceTable dist(g);
  // clique_distance[c][x] = dist(x, C_c)
  std::vector<std::vector<int>> clique_distance(report.cliques.size(),
                                                std::vector<int>(static_cast<std::size_t>(n)));
  for (std::size_t c = 0; c < report.cliques.size(); ++c) {
    const auto& q = report.cliques[c];
    for (Vertex x = 0; x < n; ++x) {
      int nearest = dist(x, q.front());
      for (Vertex y : q) nearest = std::min(nearest, dist(x, y));
      std::int64_t at_nearest = 0;
      for (Vertex y : q) at_nearest += dist(x, y) == nearest ? 1 : 0;
      clique_distance[c][x] = nearest;
      detail::record_constant(report.psi, static_cast<std::size_t>(nearest), at_nearest,
                              "psi_" + std::to_string(nearest));
    }
  }
  report.tau.assign(1, 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      const int i = dist(x, y);
      if (i == 0) continue;
      std::int64_t closer = 0;
      for (int c : cliques_of[x]) closer += clique_distance[c][y] == i - 1 ? 1 : 0;
      detail::record_constant(report.tau, static_cast<std::size_t>(i), closer,
                              "tau_" + std::to_string(i));
    }
  }
  report.tau[0] = 0;
  report.neighborhood_kind = classify_neighborhood(g, true).kind;
  return report;
}

/// Geometric parameters implied by the array alone, assuming a geometry with
/// m = -theta_min cliques per vertex:
///   tau_1 = 1, psi_0 = 1, tau_i = c_i / psi_{i-1}, psi_i = k/m + 1 - b_i/(m - tau_i).
/// `is_geometric` records that these are integral, in range, and satisfy
/// tau_2 >= psi_1 and mu <= m^2; necessary but not sufficient for a geometry.
inline CliqueGeometryReport infer_geometry_from_array(const IntersectionArray& arr,
                                                      const SpectralProfile& profile) {
  CliqueGeometryReport report;
  report.source = GeometrySource::kArray;
  const double theta_min = profile.theta_min();
  report.delsarte_value = delsarte_bound(static_cast<double>(arr.k()), theta_min);
  if (!profile.integral.back()) {
    report.note = "smallest eigenvalue is not an integer";
    return report;
  }
  const std::int64_t m = -static_cast<std::int64_t>(std::llround(theta_min));
  const std::int64_t k = arr.k();
  if (m < 1 || k % m != 0) {
    report.note = "k is not divisible by m = " + std::to_string(m);
    return report;
  }
  report.m = m;
  report.delsarte_size = k / m + 1;
  report.psi = {1};
  report.tau = {0};
  for (int i = 1; i <= arr.d(); ++i) {
    const std::int64_t prev_psi = report.psi.back();
    if (arr.c(i) % prev_psi != 0) {
      report.note = "c_" + std::to_string(i) + " is not divisible by psi_" + std::to_string(i - 1);
      return report;
    }
    const std::int64_t tau = arr.c(i) / prev_psi;
    if (tau < 1 || tau > m) {
      report.note = "tau_" + std::to_string(i) + " = " + std::to_string(tau) + " outside [1, m]";
      return report;
    }
    report.tau.push_back(tau);
    if (i == arr.d()) break;
    if (tau == m || arr.b(i) % (m - tau) != 0) {
      report.note = "b_" + std::to_string(i) + " is not divisible by m - tau_" + std::to_string(i);
      return report;
    }
    const std::int64_t psi = k / m + 1 - arr.b(i) / (m - tau);
    if (psi < 1 || psi > k / m + 1) {
      report.note = "psi_" + std::to_string(i) + " = " + std::to_string(psi) + " out of range";
      return report;
    }
    report.psi.push_back(psi);
  }
  if (report.tau.size() > 1 && arr.d() >= 1 && report.tau[1] != 1) {
    report.note = "tau_1 must equal 1";
    return report;
  }
  if (arr.d() >= 2 && report.tau.size() > 2 && report.tau[2] < report.psi[1]) {
    report.note = "tau_2 = " + std::to_string(report.tau[2]) + " < psi_1 = " +
                  std::to_string(report.psi[1]);
    return report;
  }
  if (arr.d() >= 2 && arr.mu() > m * m) {
    report.note = "mu = " + std::to_string(arr.mu()) + " exceeds m^2 = " + std::to_string(m * m);
    return report;
  }
  report.is_geometric = true;
  report.neighborhood_kind = arr.d() >= 2 && report.psi.size() >= 2 && report.psi[1] >= 2
                                 ? NeighborhoodKind::kConnectedLocal
                                 : NeighborhoodKind::kDisjointCliquesLocal;
  report.note = "parameters inferred from the array";
  return report;
}

/// c_i = tau_i psi_{i-1} (1 <= i <= d), b_i = (m - tau_i)(k/m + 1 - psi_i)
/// (1 <= i <= d-1), tau_2 >= psi_1 and mu <= m^2.
inline std::vector<InequalityReport> verify_geometric_identities(
    const CliqueGeometryReport& report, const IntersectionArray& arr) {
  std::vector<InequalityReport> out;
  if (!report.is_geometric) {
    out.push_back(InequalityReport::skipped("geometric_identities", "not geometric"));
    return out;
  }
  const auto m = static_cast<double>(report.m);
  const double line = static_cast<double>(arr.k()) / m + 1.0;
  for (int i = 1; i <= arr.d(); ++i) {
    const bool have = static_cast<std::size_t>(i) < report.tau.size() &&
                      static_cast<std::size_t>(i - 1) < report.psi.size();
    if (!have) {
      out.push_back(InequalityReport::equal("c_identity_" + std::to_string(i), 0, 1)
                        .because("tau or psi missing at this index"));
      continue;
    }
    const double product = static_cast<double>(report.tau_at(i) * report.psi_at(i - 1));
    out.push_back(InequalityReport::equal("c_identity_" + std::to_string(i),
                                          static_cast<double>(arr.c(i)), product)
                      .with("tau", static_cast<double>(report.tau_at(i)))
                      .with("psi", static_cast<double>(report.psi_at(i - 1))));
  }
  for (int i = 1; i < arr.d(); ++i) {
    const bool have = static_cast<std::size_t>(i) < report.tau.size() &&
                      static_cast<std::size_t>(i) < report.psi.size();
    if (!have) {
      out.push_back(InequalityReport::equal("b_identity_" + std::to_string(i), 0, 1)
                        .because("tau or psi missing at this index"));
      continue;
    }
    const double tau = static_cast<double>(report.tau_at(i));
    const double psi = static_cast<double>(report.psi_at(i));
    out.push_back(InequalityReport::equal("b_identity_" + std::to_string(i),
                                          static_cast<double>(arr.b(i)),
                                          (m - tau) * (line - psi))
                      .with("tau", tau)
                      .with("psi", psi));
  }
  if (arr.d() >= 2 && report.tau.size() > 2 && report.psi.size() > 1) {
    out.push_back(InequalityReport::at_least("tau2_ge_psi1",
                                             static_cast<double>(report.tau_at(2)),
                                             static_cast<double>(report.psi_at(1))));
  }
  out.push_back(InequalityReport::at_most("mu_le_m_squared", static_cast<double>(arr.mu()),
                                          m * m));
  return out;
}

/// Line-recognition hypotheses for a distance-regular graph, where every
/// adjacent pair has exactly lambda common neighbors and every non-adjacent
/// pair at most max(mu, 1).
struct MetschReport {
  std::int64_t m = 0;
  std::int64_t lambda1 = 0;
  std::int64_t lambda2 = 0;
  std::int64_t mu_bound = 0;
  std::int64_t k = 0;
  std::array<bool, 4> conditions_hold{};
  double condition3_lhs = 0, condition3_rhs = 0;
  double condition4_lhs = 0, condition4_rhs = 0;
  double line_threshold = 0;

  bool all_hold() const {
    return std::all_of(conditions_hold.begin(), conditions_hold.end(), [](bool b) { return b; });
  }
};

inline MetschReport metsch_criterion(const IntersectionArray& arr, std::int64_t m) {
  require(m >= 1, "Metsch criterion needs m >= 1");
  MetschReport r;
  r.m = m;
  r.k = arr.k();
  r.lambda1 = r.lambda2 = arr.lambda();
  r.mu_bound = std::max<std::int64_t>(arr.mu(), 1);
  const auto md = static_cast<double>(m);
  const auto mu = static_cast<double>(r.mu_bound);
  r.conditions_hold[0] = r.lambda1 <= r.lambda2;
  r.conditions_hold[1] = arr.mu() <= r.mu_bound;
  r.condition3_lhs = static_cast<double>(2 * r.lambda1 - r.lambda2);
  r.condition3_rhs = (2 * md - 1) * (mu - 1) - 1;
  r.conditions_hold[2] = r.condition3_lhs > r.condition3_rhs;
  r.condition4_lhs = static_cast<double>(r.k);
  r.condition4_rhs =
      (md + 1) * (static_cast<double>(r.lambda1) + 1) - 0.5 * md * (md + 1) * (mu - 1);
  r.conditions_hold[3] = r.condition4_lhs < r.condition4_rhs;
  r.line_threshold = static_cast<double>(r.lambda1) + 2 - (md - 1) * (mu - 1);
  return r;
}

struct LocalLineGraphVerdict {
  bool all = true;
  std::vector<bool> per_vertex;
  int rows = 0;
  int cols = 0;
};

namespace detail {

// Recognizes the rows x cols rook's graph through its two transversal clique families.
inline bool is_rook_graph(const Graph& local, int rows, int cols) {
  if (local.order() != rows * cols) return false;
  if (rows == 1 || cols == 1) {
    VertexSet all(static_cast<std::size_t>(local.order()));
    for (Vertex v = 0; v < local.order(); ++v) all[v] = v;
    return is_clique(local, all);
  }
  const auto degree = local.regular_degree();
  if (!degree || *degree != rows + cols - 2) return false;
  const auto cliques = enumerate_maximal_cliques(local, 1);
  if (static_cast<int>(cliques.size()) != rows + cols) return false;
  const auto meet = [](const VertexSet& x, const VertexSet& y) {
    VertexSet common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    return common.size();
  };
  std::vector<int> family(cliques.size(), 1);
  family[0] = 0;
  for (std::size_t i = 1; i < cliques.size(); ++i) {
    if (meet(cliques[0], cliques[i]) == 0) family[i] = 0;
  }
  std::array<int, 2> count{0, 0};
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    ++count[family[i]];
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      const auto shared = meet(cliques[i], cliques[j]);
      if (family[i] == family[j] ? shared != 0 : shared != 1) return false;
    }
  }
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (static_cast<int>(cliques[i].size()) != count[1 - family[i]]) return false;
  }
  return (count[0] == rows && count[1] == cols) || (count[0] == cols && count[1] == rows);
}

}  // namespace detail

/// Whether every X(v) is the m x (k/m) rook's graph L(K_{m,k/m}).
inline LocalLineGraphVerdict local_line_graph_check(const Graph& g, std::int64_t m) {
  const auto k = g.regular_degree();
  require(k.has_value(), "local line-graph check needs a regular graph");
  require(m >= 1 && *k % m == 0, "k must be divisible by m");
  LocalLineGraphVerdict out;
  out.rows = static_cast<int>(m);
  out.cols = static_cast<int>(*k / m);
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool ok = detail::is_rook_graph(neighborhood_subgraph(g, v).graph, out.rows, out.cols);
    out.per_vertex.push_back(ok);
    out.all = out.all && ok;
  }
  return out;
}

}  // namespace drg

#endif  // DRG_GEOMETRY_HPP_
