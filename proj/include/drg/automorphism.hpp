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

#ifndef DRG_AUTOMORPHISM_HPP_
#define DRG_AUTOMORPHISM_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "drg/error.hpp"
#include "drg/graph.hpp"

namespace drg {

struct Automorphism {
  std::vector<Vertex> perm;
  int support = 0;
};

inline int support_of(const std::vector<Vertex>& perm) {
  int moved = 0;
  for (std::size_t v = 0; v < perm.size(); ++v) moved += perm[v] != static_cast<Vertex>(v) ? 1 : 0;
  return moved;
}

inline bool preserves_adjacency(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) return false;
  std::vector<bool> seen(perm.size(), false);
  for (Vertex image : perm) {
    if (image < 0 || image >= g.order() || seen[image]) return false;
    seen[image] = true;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(perm[u], perm[v])) return false;
  }
  return true;
}

namespace detail {

using Coloring = std::vector<int>;

/// Refines two colorings of the same graph in lockstep so that equal colors
/// keep meaning the same thing on both sides. Returns false as soon as the
/// two sides disagree, which rules out any isomorphism between them.
class PairRefiner {
 public:
  explicit PairRefiner(const Graph& g) : g_(g) {}

  bool refine(Coloring& left, Coloring& right) const {
    int classes = count_classes(left);
    while (true) {
      if (!step(left, right)) return false;
      const int next = count_classes(left);
      if (next == classes) return true;
      classes = next;
    }
  }

 private:
  static int count_classes(Coloring c) {
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Signature of a (side, vertex) slot: its color, then its sorted neighbor
  // colors. All 2n signatures share one flat buffer.
  bool step(Coloring& left, Coloring& right) const {
    const int n = g_.order();
    std::vector<int> offset(2 * static_cast<std::size_t>(n) + 1, 0);
    for (int slot = 0; slot < 2 * n; ++slot) {
      offset[slot + 1] = offset[slot] + 1 + g_.degree(slot % n);
    }
    std::vector<int> buffer(static_cast<std::size_t>(offset.back()));
    for (int slot = 0; slot < 2 * n; ++slot) {
      const Coloring& c = slot < n ? left : right;
      const Vertex v = slot % n;
      int* out = buffer.data() + offset[slot];
      out[0] = c[v];
      int pos = 1;
      for (Vertex w : g_.neighbors(v)) out[pos++] = c[w];
      std::sort(out + 1, out + pos);
    }
    const auto span_of = [&](int slot) {
      return std::pair(buffer.begin() + offset[slot], buffer.begin() + offset[slot + 1]);
    };
    const auto less = [&](int x, int y) {
      const auto [xb, xe] = span_of(x);
      const auto [yb, ye] = span_of(y);
      return std::lexicographical_compare(xb, xe, yb, ye);
    };
    const auto same = [&](int x, int y) {
      const auto [xb, xe] = span_of(x);
      const auto [yb, ye] = span_of(y);
      return std::equal(xb, xe, yb, ye);
    };
    std::vector<int> order(2 * static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), less);
    std::vector<int> rank(order.size());
    // Each signature class must hold as many left slots as right slots.
    int balance = 0;
    int current = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || !same(order[i], order[i - 1])) {
        if (balance != 0) return false;
        ++current;
      }
      rank[order[i]] = current;
      balance += order[i] < n ? 1 : -1;
    }
    if (balance != 0) return false;
    for (Vertex v = 0; v < n; ++v) {
      left[v] = rank[v];
      right[v] = rank[n + v];
    }
    return true;
  }

  const Graph& g_;
};

inline void individualize(Coloring& c, Vertex v) {
  for (auto& color : c) color *= 2;
  c[v] += 1;
}

/// First smallest color class of size > 1, or -1 when discrete.
inline int target_cell(const Coloring& c) {
  std::vector<int> sizes(c.size(), 0);
  for (int color : c) ++sizes[color];
  int best = -1;
  for (int color = 0; color < static_cast<int>(sizes.size()); ++color) {
    if (sizes[color] > 1 && (best < 0 || sizes[color] < sizes[best])) best = color;
  }
  return best;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& visit)
      : g_(g), refiner_(g), visit_(visit) {}

  void run() {
    Coloring left(static_cast<std::size_t>(g_.order()), 0);
    Coloring right = left;
    if (!refiner_.refine(left, right)) return;
    descend(left, right);
  }

 private:
  bool descend(const Coloring& left, const Coloring& right) {
    const int cell = target_cell(left);
    if (cell < 0) return leaf(left, right);
    const int n = g_.order();
    Vertex v = 0;
    while (left[v] != cell) ++v;
    for (Vertex w = 0; w < n; ++w) {
      if (right[w] != cell) continue;
      Coloring l = left;
      Coloring r = right;
      individualize(l, v);
      individualize(r, w);
      if (!refiner_.refine(l, r)) continue;
      if (!descend(l, r)) return false;
    }
    return true;
  }

  bool leaf(const Coloring& left, const Coloring& right) {
    const int n = g_.order();
    std::vector<Vertex> vertex_of_color(static_cast<std::size_t>(n));
    for (Vertex w = 0; w < n; ++w) vertex_of_color[right[w]] = w;
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) perm[v] = vertex_of_color[left[v]];
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex x : g_.neighbors(u)) {
        if (!g_.adjacent(perm[u], perm[x])) return true;
      }
    }
    return visit_(perm);
  }

  const Graph& g_;
  PairRefiner refiner_;
  const std::function<bool(const std::vector<Vertex>&)>& visit_;
};

}  // namespace detail

/// Calls `visit` once per automorphism, the identity included, in the
/// deterministic order of the search tree. Stops early when `visit` returns false.
inline void for_each_automorphism(const Graph& g,
                                  const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (g.order() == 0) return;
  detail::AutomorphismSearch(g, visit).run();
}

struct AutomorphismList {
  /// Non-identity elements sorted by permutation.
  std::vector<Automorphism> elements;
  bool truncated = false;
  /// |Aut(g)| when the enumeration completed.
  std::optional<std::int64_t> group_order;
};

/// Non-identity automorphisms, at most `max_count` of them.
inline AutomorphismList enumerate_automorphisms(const Graph& g, std::int64_t max_count) {
  require(max_count >= 0, "max_count must be non-negative");
  AutomorphismList out;
  std::int64_t total = 0;
  for_each_automorphism(g, [&](const std::vector<Vertex>& perm) {
    ++total;
    const int moved = support_of(perm);
    if (moved == 0) return true;
    if (static_cast<std::int64_t>(out.elements.size()) == max_count) {
      out.truncated = true;
      return false;
    }
    if (!preserves_adjacency(g, perm)) {
      fail(ErrorKind::kInternal, "search emitted a permutation that breaks adjacency");
    }
    out.elements.push_back({perm, moved});
    return true;
  });
  if (g.order() == 0) total = 1;
  std::sort(out.elements.begin(), out.elements.end(),
            [](const Automorphism& x, const Automorphism& y) { return x.perm < y.perm; });
  if (!out.truncated) out.group_order = total;
  return out;
}

}  // namespace drg

#endif  // DRG_AUTOMORPHISM_HPP_
