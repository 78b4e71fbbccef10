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

#ifndef DRG_GENERATORS_HPP_
#define DRG_GENERATORS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drg/error.hpp"
#include "drg/graph.hpp"

namespace drg {

enum class Family {
  kJohnson,
  kHamming,
  kDoob,
  kShrikhande,
  kCocktailParty,
  kCompleteBipartiteLine,
  kComplete,
  kCycle,
  kPetersen,
};

inline std::string_view to_string(Family family) {
  switch (family) {
    case Family::kJohnson: return "johnson";
    case Family::kHamming: return "hamming";
    case Family::kDoob: return "doob";
    case Family::kShrikhande: return "shrikhande";
    case Family::kCocktailParty: return "cocktail-party";
    case Family::kCompleteBipartiteLine: return "complete-bipartite-line";
    case Family::kComplete: return "complete";
    case Family::kCycle: return "cycle";
    case Family::kPetersen: return "petersen";
  }
  return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kJohnson, Family::kHamming, Family::kDoob, Family::kShrikhande,
                   Family::kCocktailParty, Family::kCompleteBipartiteLine,
                   Family::kComplete, Family::kCycle, Family::kPetersen}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

/// Named family plus its size parameters.
///
///   Johnson                  J(s, d): d-subsets of an s-set
///   Hamming                  H(d, s): d-tuples over an s-letter alphabet
///   Doob                     H(doob_t, 4) x Shrikhande^doob_l
///   Shrikhande               no parameters
///   CocktailParty            s pairs, 2s vertices
///   CompleteBipartiteLine    L(K_{s,d}), the s x d rook's graph
///   Complete                 K_s
///   Cycle                    C_s
///   Petersen                 no parameters
struct GeneratorSpec {
  Family family = Family::kComplete;
  int s = 0;
  int d = 0;
  int doob_t = 0;
  int doob_l = 0;

  static GeneratorSpec johnson(int s, int d) { return {Family::kJohnson, s, d, 0, 0}; }
  static GeneratorSpec hamming(int d, int s) { return {Family::kHamming, s, d, 0, 0}; }
  static GeneratorSpec doob(int t, int l) { return {Family::kDoob, 0, 0, t, l}; }
  static GeneratorSpec shrikhande() { return {Family::kShrikhande, 0, 0, 0, 0}; }
  static GeneratorSpec cocktail_party(int pairs) { return {Family::kCocktailParty, pairs, 0, 0, 0}; }
  static GeneratorSpec rook(int rows, int cols) {
    return {Family::kCompleteBipartiteLine, rows, cols, 0, 0};
  }
  static GeneratorSpec complete(int n) { return {Family::kComplete, n, 0, 0, 0}; }
  static GeneratorSpec cycle(int n) { return {Family::kCycle, n, 0, 0, 0}; }
  static GeneratorSpec petersen() { return {Family::kPetersen, 0, 0, 0, 0}; }

  std::string name() const {
    const auto s_ = std::to_string(s);
    const auto d_ = std::to_string(d);
    switch (family) {
      case Family::kJohnson: return "J(" + s_ + "," + d_ + ")";
      case Family::kHamming: return "H(" + d_ + "," + s_ + ")";
      case Family::kDoob:
        return "Doob(" + std::to_string(doob_t) + "," + std::to_string(doob_l) + ")";
      case Family::kShrikhande: return "Shrikhande";
      case Family::kCocktailParty: return "CP(" + s_ + ")";
      case Family::kCompleteBipartiteLine: return "L(K_{" + s_ + "," + d_ + "})";
      case Family::kComplete: return "K_" + s_;
      case Family::kCycle: return "C_" + s_;
      case Family::kPetersen: return "Petersen";
    }
    return "?";
  }

  void validate() const {
    switch (family) {
      case Family::kJohnson:
        require(d >= 1, "Johnson requires d >= 1");
        require(s >= 2 * d, "Johnson requires s >= 2d");
        break;
      case Family::kHamming:
        require(d >= 1, "Hamming requires d >= 1");
        require(s >= 2, "Hamming requires s >= 2");
        break;
      case Family::kDoob:
        require(doob_l >= 1, "Doob requires doob_l >= 1");
        require(doob_t >= 0, "Doob requires doob_t >= 0");
        break;
      case Family::kShrikhande:
        break;
      case Family::kCocktailParty:
        require(s >= 2, "CocktailParty requires s >= 2 pairs");
        break;
      case Family::kCompleteBipartiteLine:
        require(s >= 1 && d >= 1, "CompleteBipartiteLine requires s >= 1 and d >= 1");
        break;
      case Family::kComplete:
        require(s >= 1, "Complete requires s >= 1");
        break;
      case Family::kCycle:
        require(s >= 3, "Cycle requires s >= 3");
        break;
      case Family::kPetersen:
        break;
    }
  }
};

namespace detail {

inline std::vector<std::vector<int>> lexicographic_subsets(int s, int d) {
  std::vector<std::vector<int>> result;
  std::vector<int> current(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) current[i] = i;
  while (true) {
    result.push_back(current);
    int i = d - 1;
    while (i >= 0 && current[i] == s - d + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < d; ++j) current[j] = current[j - 1] + 1;
  }
  return result;
}

inline std::int64_t checked_power(std::int64_t base, int exponent, std::int64_t cap) {
  std::int64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    require(value <= cap / base, "generated graph would be too large");
    value *= base;
  }
  return value;
}

/// Cartesian product; vertex (x, y) gets index x * |B| + y.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
  const int nb = b.order();
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a.order(); ++x) {
    for (Vertex y = 0; y < nb; ++y) {
      const Vertex here = x * nb + y;
      for (Vertex y2 : b.neighbors(y)) {
        if (y < y2) edges.emplace_back(here, x * nb + y2);
      }
      for (Vertex x2 : a.neighbors(x)) {
        if (x < x2) edges.emplace_back(here, x2 * nb + y);
      }
    }
  }
  return Graph(a.order() * nb, edges);
}

}  // namespace detail

inline constexpr std::int64_t kMaxGeneratedVertices = 1 << 22;

inline Graph johnson_graph(int s, int d) {
  GeneratorSpec::johnson(s, d).validate();
  const auto subsets = detail::lexicographic_subsets(s, d);
  require(static_cast<std::int64_t>(subsets.size()) <= kMaxGeneratedVertices,
          "generated graph would be too large");
  const int n = static_cast<int>(subsets.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // Sorted subsets: count the common elements by a merge.
      int common = 0;
      std::size_t i = 0, j = 0;
      while (i < subsets[u].size() && j < subsets[v].size()) {
        if (subsets[u][i] == subsets[v][j]) {
          ++common;
          ++i;
          ++j;
        } else if (subsets[u][i] < subsets[v][j]) {
          ++i;
        } else {
          ++j;
        }
      }
      if (common == d - 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, GeneratorSpec::johnson(s, d).name());
}

/// Tuples in lexicographic order; coordinate 0 is the most significant digit.
inline Graph hamming_graph(int d, int s) {
  GeneratorSpec::hamming(d, s).validate();
  const auto n64 = detail::checked_power(s, d, kMaxGeneratedVertices);
  const int n = static_cast<int>(n64);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    int place = 1;
    for (int position = 0; position < d; ++position) {
      const int digit = (v / place) % s;
      for (int other = digit + 1; other < s; ++other) {
        edges.emplace_back(v, v + (other - digit) * place);
      }
      place *= s;
    }
  }
  return Graph(n, edges, GeneratorSpec::hamming(d, s).name());
}

/// 4x4 torus Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}; vertex (a,b) is 4a+b.
inline Graph shrikhande_graph() {
  constexpr std::array<std::array<int, 2>, 3> kSteps = {{{1, 0}, {0, 1}, {1, 1}}};
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (const auto& step : kSteps) {
        const int u = 4 * a + b;
        const int v = 4 * ((a + step[0]) % 4) + (b + step[1]) % 4;
        edges.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
  }
  return Graph(16, edges, "Shrikhande");
}

inline Graph doob_graph(int t, int l) {
  GeneratorSpec::doob(t, l).validate();
  detail::checked_power(4, t + 2 * l, kMaxGeneratedVertices);
  Graph result = t > 0 ? hamming_graph(t, 4) : Graph(1, std::vector<Edge>{});
  const Graph shrikhande = shrikhande_graph();
  for (int i = 0; i < l; ++i) result = detail::cartesian_product(result, shrikhande);
  return Graph(result.order(), result.edges(), GeneratorSpec::doob(t, l).name());
}

inline Graph complete_graph(int n) {
  GeneratorSpec::complete(n).validate();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges, GeneratorSpec::complete(n).name());
}

inline Graph cycle_graph(int n) {
  GeneratorSpec::cycle(n).validate();
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges, GeneratorSpec::cycle(n).name());
}

/// Vertices 2i and 2i+1 form the i-th non-adjacent pair.
inline Graph cocktail_party_graph(int pairs) {
  GeneratorSpec::cocktail_party(pairs).validate();
  const int n = 2 * pairs;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / 2 != v / 2) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, GeneratorSpec::cocktail_party(pairs).name());
}

/// Rook's graph on rows x cols cells; cell (i, j) is i * cols + j.
inline Graph rook_graph(int rows, int cols) {
  GeneratorSpec::rook(rows, cols).validate();
  std::vector<Edge> edges;
  const int n = rows * cols;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / cols == v / cols || u % cols == v % cols) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, GeneratorSpec::rook(rows, cols).name());
}

/// K_{s,t}: vertices 0..s-1 on one side, s..s+t-1 on the other.
inline Graph complete_bipartite_graph(int s, int t) {
  require(s >= 1 && t >= 1, "complete bipartite graph requires s, t >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < s; ++u) {
    for (int v = 0; v < t; ++v) edges.emplace_back(u, s + v);
  }
  return Graph(s + t, edges, "K_{" + std::to_string(s) + "," + std::to_string(t) + "}");
}

inline Graph path_graph(int n) {
  require(n >= 1, "path requires at least one vertex");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges, "P_" + std::to_string(n));
}

/// Kneser graph K(s, d): d-subsets adjacent when disjoint. K(5,2) is Petersen.
inline Graph kneser_graph(int s, int d) {
  require(d >= 1 && s >= 2 * d, "Kneser requires d >= 1 and s >= 2d");
  const auto subsets = detail::lexicographic_subsets(s, d);
  const int n = static_cast<int>(subsets.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool disjoint = true;
      for (int x : subsets[u]) {
        for (int y : subsets[v]) disjoint = disjoint && x != y;
      }
      if (disjoint) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, "Kneser(" + std::to_string(s) + "," + std::to_string(d) + ")");
}

inline Graph petersen_graph() {
  const Graph g = kneser_graph(5, 2);
  return Graph(g.order(), g.edges(), "Petersen");
}

inline Graph generate(const GeneratorSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::kJohnson: return johnson_graph(spec.s, spec.d);
    case Family::kHamming: return hamming_graph(spec.d, spec.s);
    case Family::kDoob: return doob_graph(spec.doob_t, spec.doob_l);
    case Family::kShrikhande: return shrikhande_graph();
    case Family::kCocktailParty: return cocktail_party_graph(spec.s);
    case Family::kCompleteBipartiteLine: return rook_graph(spec.s, spec.d);
    case Family::kComplete: return complete_graph(spec.s);
    case Family::kCycle: return cycle_graph(spec.s);
    case Family::kPetersen: return petersen_graph();
  }
  fail(ErrorKind::kInternal, "unhandled family");
}

}  // namespace drg

#endif  // DRG_GENERATORS_HPP_
