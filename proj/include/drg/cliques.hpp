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

#ifndef DRG_CLIQUES_HPP_
#define DRG_CLIQUES_HPP_

#include <algorithm>
#include <array>
#include <functional>
#include <iterator>
#include <optional>
#include <vector>

#include "drg/error.hpp"
#include "drg/graph.hpp"

namespace drg {

using VertexSet = std::vector<Vertex>;

namespace detail {

inline VertexSet intersect_sorted(const VertexSet& a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet subtract_sorted(const VertexSet& a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Bron–Kerbosch with Tomita pivoting. `candidates` and `excluded` stay sorted.
inline void expand_cliques(const Graph& g, VertexSet& current, VertexSet candidates,
                           VertexSet excluded, std::size_t min_size,
                           std::vector<VertexSet>& out) {
  if (candidates.empty()) {
    if (excluded.empty() && current.size() >= min_size) {
      VertexSet clique = current;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  if (current.size() + candidates.size() < min_size) return;

  Vertex pivot = candidates.front();
  std::size_t best = 0;
  for (const VertexSet* pool : {&candidates, &excluded}) {
    for (Vertex u : *pool) {
      const std::size_t hits = intersect_sorted(candidates, g.neighbors(u)).size();
      if (hits > best || (hits == best && u < pivot)) {
        best = hits;
        pivot = u;
      }
    }
  }
  for (Vertex v : subtract_sorted(candidates, g.neighbors(pivot))) {
    current.push_back(v);
    expand_cliques(g, current, intersect_sorted(candidates, g.neighbors(v)),
                   intersect_sorted(excluded, g.neighbors(v)), min_size, out);
    current.pop_back();
    candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
    excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
  }
}

}  // namespace detail

/// All maximal cliques with at least `min_size` vertices, each sorted, the
/// list sorted lexicographically.
inline std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g, int min_size) {
  std::vector<VertexSet> out;
  VertexSet current;
  VertexSet all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  detail::expand_cliques(g, current, all, {}, static_cast<std::size_t>(std::max(min_size, 0)),
                         out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Induced C4 in cycle order (w[i] adjacent to w[i+1 mod 4], diagonals not).
inline std::optional<std::array<Vertex, 4>> find_induced_quadrangle(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    // The opposite corner c is a non-neighbor of a with two non-adjacent common neighbors.
    for (Vertex c = a + 1; c < n; ++c) {
      if (g.adjacent(a, c)) continue;
      const auto common = detail::intersect_sorted(
          VertexSet(g.neighbors(a).begin(), g.neighbors(a).end()), g.neighbors(c));
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (!g.adjacent(common[i], common[j])) {
            return std::array<Vertex, 4>{a, common[i], c, common[j]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

struct BipartiteWitness {
  VertexSet left;
  VertexSet right;
};

inline constexpr int kMaxBipartiteProduct = 12;

namespace detail {

// Extends `chosen` to an independent set of `size` vertices drawn from `pool`
// (indices >= start); returns true on success.
inline bool grow_independent(const Graph& g, const VertexSet& pool, std::size_t start,
                             std::size_t size, VertexSet& chosen) {
  if (chosen.size() == size) return true;
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool.size() - i < size - chosen.size()) return false;
    const Vertex v = pool[i];
    const bool free = std::none_of(chosen.begin(), chosen.end(),
                                   [&](Vertex u) { return g.adjacent(u, v); });
    if (!free) continue;
    chosen.push_back(v);
    if (grow_independent(g, pool, i + 1, size, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Induced K_{a,b}: independent sets A, B with every A-B pair adjacent.
/// Requires a, b >= 1 and a*b <= 12.
inline std::optional<BipartiteWitness> find_induced_complete_bipartite(const Graph& g, int a,
                                                                       int b) {
  require(a >= 1 && b >= 1, "induced complete bipartite search requires a, b >= 1");
  require(a * b <= kMaxBipartiteProduct,
          "induced complete bipartite search requires a*b <= 12");
  const auto need_a = static_cast<std::size_t>(a);
  const auto need_b = static_cast<std::size_t>(b);

  VertexSet left;
  std::optional<BipartiteWitness> found;
  // Depth-first over independent left sets; `common` is the joint neighborhood so far.
  std::function<bool(Vertex, const VertexSet&)> search = [&](Vertex start,
                                                             const VertexSet& common) {
    if (left.size() == need_a) {
      VertexSet right;
      if (detail::grow_independent(g, common, 0, need_b, right)) {
        found = BipartiteWitness{left, right};
        return true;
      }
      return false;
    }
    for (Vertex v = start; v < g.order(); ++v) {
      if (g.degree(v) < b) continue;
      if (std::any_of(left.begin(), left.end(), [&](Vertex u) { return g.adjacent(u, v); })) {
        continue;
      }
      VertexSet next = left.empty()
                           ? VertexSet(g.neighbors(v).begin(), g.neighbors(v).end())
                           : detail::intersect_sorted(common, g.neighbors(v));
      if (next.size() < need_b) continue;
      left.push_back(v);
      if (search(v + 1, next)) return true;
      left.pop_back();
    }
    return false;
  };
  search(0, {});
  return found;
}

}  // namespace drg

#endif  // DRG_CLIQUES_HPP_
