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

#ifndef DRG_DUAL_HPP_
#define DRG_DUAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

#include "drg/cliques.hpp"
#include "drg/error.hpp"
#include "drg/geometry.hpp"
#include "drg/graph.hpp"
#include "drg/linalg.hpp"
#include "drg/report.hpp"
#include "drg/spectral.hpp"

namespace drg {

/// Graph on the Delsarte cliques, adjacent when two cliques share a vertex.
struct DualGraph {
  Graph graph;
  std::vector<VertexSet> clique_of_vertex;
  std::int64_t k_tilde = 0;
  std::int64_t lambda_tilde = 0;
  int diameter = 0;
};

/// Builds the dual and checks |cliques| (1 + k/m) = n m, degree
/// (m-1)(k/m+1) and common-neighbor count (m-2) + (psi_1-1) k/m.
inline DualGraph build_dual(const Graph& g, const CliqueGeometryReport& geometry) {
  require(geometry.is_geometric && geometry.source == GeometrySource::kGraph,
          "dual graph needs a clique geometry found on an explicit graph");
  const auto k = g.regular_degree();
  require(k.has_value(), "dual graph needs a regular graph");
  const std::int64_t m = geometry.m;
  const std::int64_t line = *k / m;
  const auto count = static_cast<std::int64_t>(geometry.cliques.size());
  if (count * (1 + line) != static_cast<std::int64_t>(g.order()) * m) {
    fail(ErrorKind::kInconsistency, "clique count " + std::to_string(count) +
                                        " violates |C|(1+k/m) = n m");
  }

  DualGraph dual;
  dual.clique_of_vertex = geometry.cliques;
  dual.k_tilde = (m - 1) * (line + 1);
  const std::int64_t psi1 = geometry.psi.size() > 1 ? geometry.psi[1] : 1;
  dual.lambda_tilde = (m - 2) + (psi1 - 1) * line;

  // Cliques through each vertex; two cliques meet in at most one vertex.
  std::vector<std::vector<int>> through(static_cast<std::size_t>(g.order()));
  for (std::size_t c = 0; c < geometry.cliques.size(); ++c) {
    for (Vertex v : geometry.cliques[c]) through[v].push_back(static_cast<int>(c));
  }
  std::vector<Edge> edges;
  for (const auto& list : through) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        edges.emplace_back(std::min(list[i], list[j]), std::max(list[i], list[j]));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    const auto dup = *std::adjacent_find(edges.begin(), edges.end());
    fail(ErrorKind::kInconsistency, "cliques " + std::to_string(dup.first) + " and " +
                                        std::to_string(dup.second) +
                                        " share more than one vertex");
  }
  dual.graph = Graph(static_cast<int>(count), edges,
                     g.label().empty() ? "" : "dual(" + g.label() + ")");

  for (Vertex c = 0; c < dual.graph.order(); ++c) {
    if (dual.graph.degree(c) != dual.k_tilde) {
      fail(ErrorKind::kInconsistency, "dual vertex " + std::to_string(c) + " has degree " +
                                          std::to_string(dual.graph.degree(c)) + ", expected " +
                                          std::to_string(dual.k_tilde));
    }
  }
  for (const auto& [x, y] : dual.graph.edges()) {
    std::int64_t common = 0;
    for (Vertex z : dual.graph.neighbors(x)) common += dual.graph.adjacent(y, z) ? 1 : 0;
    if (common != dual.lambda_tilde) {
      fail(ErrorKind::kInconsistency,
           "dual edge (" + std::to_string(x) + "," + std::to_string(y) + ") has " +
               std::to_string(common) + " common neighbors, expected " +
               std::to_string(dual.lambda_tilde));
    }
  }
  dual.diameter = dual.graph.order() <= 1 ? 0 : DistanceTable(dual.graph).diameter();
  return dual;
}

/// Every dual eigenvalue lies within `tolerance` of some theta - k/m + m - 1.
inline InequalityReport dual_spectrum_check(const DualGraph& dual, const SpectralProfile& profile,
                                            std::int64_t m, double tolerance = 1e-6) {
  const auto k = static_cast<double>(profile.k);
  if (profile.k < m * m) {
    return InequalityReport::skipped("dual_spectrum_containment", "k < m^2");
  }
  std::vector<double> targets;
  for (double theta : profile.eigenvalues) {
    targets.push_back(theta - k / static_cast<double>(m) + static_cast<double>(m) - 1.0);
  }
  double worst = 0.0;
  for (double value : adjacency_eigenvalues(dual.graph)) {
    double gap = std::numeric_limits<double>::infinity();
    for (double t : targets) gap = std::min(gap, std::fabs(value - t));
    worst = std::max(worst, gap);
  }
  return InequalityReport::at_most("dual_spectrum_containment", worst, tolerance)
      .with("dual_order", dual.graph.order());
}

/// Root graph Y with X = L(Y) when m = 2. `edge_to_vertex[e]` is the vertex of
/// X for the e-th edge of `root.edges()`.
struct RootGraph {
  Graph root;
  std::vector<Vertex> edge_to_vertex;
};

inline RootGraph root_graph_m2(const Graph& g, const CliqueGeometryReport& geometry) {
  require(geometry.is_geometric && geometry.source == GeometrySource::kGraph,
          "root graph needs a clique geometry found on an explicit graph");
  require(geometry.m == 2, "root graph reconstruction needs m = 2");
  const auto dual = build_dual(g, geometry);
  RootGraph out;
  out.root = dual.graph;
  const auto root_edges = out.root.edges();
  std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
  for (const auto& [x, y] : root_edges) {
    VertexSet common;
    const auto& cx = geometry.cliques[x];
    const auto& cy = geometry.cliques[y];
    std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(), std::back_inserter(common));
    if (common.size() != 1 || hit[common.front()]) {
      fail(ErrorKind::kInconsistency, "edge-to-vertex map is not a bijection");
    }
    hit[common.front()] = true;
    out.edge_to_vertex.push_back(common.front());
  }
  if (static_cast<int>(root_edges.size()) != g.order()) {
    fail(ErrorKind::kInconsistency, "root graph has " + std::to_string(root_edges.size()) +
                                        " edges but X has " + std::to_string(g.order()) +
                                        " vertices");
  }
  const Graph line = line_graph(out.root);
  if (line.edge_count() != g.edge_count()) {
    fail(ErrorKind::kInconsistency, "L(root) and X have different edge counts");
  }
  for (const auto& [e, f] : line.edges()) {
    if (!g.adjacent(out.edge_to_vertex[e], out.edge_to_vertex[f])) {
      fail(ErrorKind::kInconsistency, "root edges " + std::to_string(e) + " and " +
                                          std::to_string(f) + " meet but their images do not");
    }
  }
  return out;
}

/// Existence filter for generalized n-gons of order (s, t): apart from ordinary
/// polygons (s = t = 1) only n in {4, 6, 8, 12} occur, and n = 12 needs s = 1 or t = 1.
inline bool feit_higman_feasible(int polygon_n, std::int64_t s, std::int64_t t) {
  require(polygon_n >= 3 && s >= 1 && t >= 1, "generalized polygon needs n >= 3, s, t >= 1");
  if (s == 1 && t == 1) return true;
  if (polygon_n % 2 != 0) return polygon_n == 3;
  if (polygon_n == 12) return s == 1 || t == 1;
  return polygon_n == 4 || polygon_n == 6 || polygon_n == 8;
}

/// Whether the array is that of a generalized 2d-gon of order (s, t):
/// k = s(t+1), lambda = s-1, c_i = 1 and b_i = k-s for 1 <= i < d, c_d = t+1.
inline bool is_generalized_polygon_array(const IntersectionArray& arr, std::int64_t& s,
                                         std::int64_t& t) {
  if (arr.d() < 2) return false;
  s = arr.lambda() + 1;
  if (s < 1 || arr.k() % s != 0) return false;
  t = arr.k() / s - 1;
  if (arr.c(arr.d()) != t + 1) return false;
  for (int i = 1; i < arr.d(); ++i) {
    if (arr.c(i) != 1 || arr.b(i) != arr.k() - s) return false;
  }
  return true;
}

}  // namespace drg

#endif  // DRG_DUAL_HPP_
