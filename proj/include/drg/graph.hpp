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

#ifndef DRG_GRAPH_HPP_
#define DRG_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drg/error.hpp"

namespace drg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph stored as sorted adjacency lists. Immutable after
/// construction; every constructor validates symmetry, range and the absence
/// of loops and duplicate edges.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list; edges may be given in either orientation.
  Graph(int n, std::span<const Edge> edges, std::string label = {})
      : adjacency_(static_cast<std::size_t>(n)), label_(std::move(label)) {
    require(n >= 0, "vertex count must be non-negative");
    for (const auto& [u, v] : edges) {
      require(u >= 0 && u < n && v >= 0 && v < n,
              "edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") has an endpoint outside [0," + std::to_string(n) + ")");
      require(u != v, "self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
      auto& list = adjacency_[v];
      std::sort(list.begin(), list.end());
      require(std::adjacent_find(list.begin(), list.end()) == list.end(),
              "duplicate edge at vertex " + std::to_string(v));
    }
  }

  Graph(int n, const std::vector<Edge>& edges, std::string label = {})
      : Graph(n, std::span<const Edge>(edges), std::move(label)) {}

  /// Builds from adjacency lists; lists are sorted and checked for symmetry.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                              std::string label = {}) {
    std::vector<Edge> edges;
    const int n = static_cast<int>(adjacency.size());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : adjacency[u]) {
        require(v >= 0 && v < n, "neighbor index out of range");
        if (u < v) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges, std::move(label));
    for (Vertex u = 0; u < n; ++u) {
      auto sorted = adjacency[u];
      std::sort(sorted.begin(), sorted.end());
      require(sorted == g.adjacency_[u],
              "adjacency is not symmetric at vertex " + std::to_string(u));
    }
    return g;
  }

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (const auto& list : adjacency_) twice += static_cast<std::int64_t>(list.size());
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) result.emplace_back(u, v);
      }
    }
    return result;
  }

  /// Common degree when the graph is regular.
  std::optional<int> regular_degree() const {
    if (adjacency_.empty()) return std::nullopt;
    const int k = degree(0);
    for (Vertex v = 1; v < order(); ++v) {
      if (degree(v) != k) return std::nullopt;
    }
    return k;
  }

  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::string label_;
};

/// BFS layers N_0(v), N_1(v), ... of the component containing `source`.
struct DistancePartition {
  Vertex source = 0;
  std::vector<std::vector<Vertex>> layers;
  int eccentricity = 0;

  std::vector<std::size_t> layer_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(layers.size());
    for (const auto& layer : layers) sizes.push_back(layer.size());
    return sizes;
  }
};

inline constexpr int kUnreachable = -1;

/// Distances from `source`; unreachable vertices get kUnreachable.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline DistancePartition distance_partition(const Graph& g, Vertex v) {
  require(v >= 0 && v < g.order(), "source vertex out of range");
  const auto dist = bfs_distances(g, v);
  DistancePartition partition;
  partition.source = v;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (dist[w] == kUnreachable) continue;
    if (static_cast<std::size_t>(dist[w]) >= partition.layers.size()) {
      partition.layers.resize(static_cast<std::size_t>(dist[w]) + 1);
    }
    partition.layers[dist[w]].push_back(w);
  }
  partition.eccentricity = static_cast<int>(partition.layers.size()) - 1;
  return partition;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

/// Dense all-pairs distance table, row-major, one byte per entry.
/// 255 marks unreachable pairs; diameters above 254 are rejected.
class DistanceTable {
 public:
  static constexpr std::uint8_t kFar = 255;

  explicit DistanceTable(const Graph& g)
      : n_(g.order()),
        table_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), kFar) {
    for (Vertex v = 0; v < n_; ++v) {
      const auto dist = bfs_distances(g, v);
      for (Vertex w = 0; w < n_; ++w) {
        if (dist[w] == kUnreachable) continue;
        require(dist[w] < kFar, "graph diameter too large for the distance table");
        table_[index(v, w)] = static_cast<std::uint8_t>(dist[w]);
      }
    }
  }

  int operator()(Vertex u, Vertex v) const {
    const auto d = table_[index(u, v)];
    return d == kFar ? kUnreachable : static_cast<int>(d);
  }

  int order() const noexcept { return n_; }

  int diameter() const {
    int best = 0;
    for (auto d : table_) {
      if (d == kFar) return kUnreachable;
      best = std::max(best, static_cast<int>(d));
    }
    return best;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_;
  std::vector<std::uint8_t> table_;
};

/// Induced subgraph together with the map from new indices to old ones.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertex_map;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return {Graph(static_cast<int>(vertices.size()), edges), std::move(vertices)};
}

/// The local graph X(v): induced on the neighbors of v.
inline InducedSubgraph neighborhood_subgraph(const Graph& g, Vertex v) {
  require(v >= 0 && v < g.order(), "vertex out of range");
  const auto nbrs = g.neighbors(v);
  return induced_subgraph(g, std::vector<Vertex>(nbrs.begin(), nbrs.end()));
}

/// Line graph; vertex i is the i-th edge of `g.edges()`.
inline Graph line_graph(const Graph& g) {
  const auto edge_list = g.edges();
  require(!edge_list.empty(), "line graph of an edgeless graph is undefined");
  std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t e = 0; e < edge_list.size(); ++e) {
    incident[edge_list[e].first].push_back(static_cast<Vertex>(e));
    incident[edge_list[e].second].push_back(static_cast<Vertex>(e));
  }
  std::vector<Edge> edges;
  for (const auto& star : incident) {
    for (std::size_t i = 0; i < star.size(); ++i) {
      for (std::size_t j = i + 1; j < star.size(); ++j) {
        edges.emplace_back(std::min(star[i], star[j]), std::max(star[i], star[j]));
      }
    }
  }
  // Two distinct edges of a simple graph share at most one endpoint.
  return Graph(static_cast<int>(edge_list.size()), edges,
               g.label().empty() ? std::string{} : "L(" + g.label() + ")");
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> component(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> result;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (component[start] != -1) continue;
    const int id = static_cast<int>(result.size());
    result.emplace_back();
    std::vector<Vertex> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      result.back().push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (component[w] == -1) {
          component[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(result.back().begin(), result.back().end());
  }
  return result;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

}  // namespace drg

#endif  // DRG_GRAPH_HPP_
