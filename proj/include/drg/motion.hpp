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

#ifndef DRG_MOTION_HPP_
#define DRG_MOTION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "drg/automorphism.hpp"
#include "drg/cliques.hpp"
#include "drg/dual.hpp"
#include "drg/error.hpp"
#include "drg/geometry.hpp"
#include "drg/graph.hpp"
#include "drg/linalg.hpp"
#include "drg/params.hpp"
#include "drg/spectral.hpp"

namespace drg {

inline constexpr std::int64_t kDefaultMaxGroup = 1'000'000;

/// Motion of a graph with no non-identity automorphism: no vertex count is
/// small enough, so the minimum over an empty set is reported as this value.
inline constexpr std::int64_t kNoMover = std::numeric_limits<std::int64_t>::max();

/// Mixing-lemma lower bound n(k - xi - q)/k, clamped at 0. `q` bounds the
/// common neighbors of any two distinct vertices.
inline double mixing_lemma_bound(std::int64_t n, std::int64_t k, double xi, std::int64_t q) {
  require(k > 0, "mixing bound needs k > 0");
  require(n >= 0 && q >= 0 && xi >= 0.0, "mixing bound needs n, q, xi >= 0");
  const double value = static_cast<double>(n) * (static_cast<double>(k) - xi -
                                                 static_cast<double>(q)) /
                       static_cast<double>(k);
  return std::max(0.0, value);
}

struct DistinguishingBound {
  double value = 0.0;
  bool hypothesis_holds = false;
  std::string note;
};

/// alpha n / d when b_j >= alpha k and c_{j+1} >= alpha k; zero otherwise.
/// Sound only for primitive graphs, which is not checked here.
inline DistinguishingBound distinguishing_bound(const IntersectionArray& arr, double alpha, int j) {
  const int d = arr.d();
  require(d >= 2 && j >= 1 && j <= d - 1,
          "distinguishing bound needs 1 <= j <= d-1, got j = " + std::to_string(j));
  require(alpha > 0.0, "alpha must be positive");
  const double k = static_cast<double>(arr.k());
  const double slack = 1e-12 * k;
  DistinguishingBound out;
  const bool b_ok = static_cast<double>(arr.b(j)) + slack >= alpha * k;
  const bool c_ok = static_cast<double>(arr.c(j + 1)) + slack >= alpha * k;
  out.hypothesis_holds = b_ok && c_ok;
  if (out.hypothesis_holds) {
    out.value = alpha * static_cast<double>(arr.n()) / d;
  } else {
    out.note = std::string(b_ok ? "" : "b_j < alpha k") + (b_ok || c_ok ? "" : "; ") +
               (c_ok ? "" : "c_{j+1} < alpha k");
  }
  return out;
}

/// Fraction of n moved in X when every non-identity automorphism of the dual
/// moves at least `dual_fraction` of its vertices.
inline double dual_motion_transfer(double dual_fraction) {
  require(dual_fraction >= 0.0 && dual_fraction <= 1.0, "dual fraction must lie in [0, 1]");
  return dual_fraction / 2.0;
}

/// Upper bound 3 ln(n) / alpha on the thickness of a group of degree n
/// whose motion is at least alpha n.
inline double thickness_bound(std::int64_t n, double alpha) {
  require(n >= 2, "thickness bound needs n >= 2");
  require(alpha > 0.0 && alpha <= 1.0, "thickness bound needs 0 < alpha <= 1");
  return 3.0 * std::log(static_cast<double>(n)) / alpha;
}

/// Largest number of common neighbors over pairs of distinct vertices.
inline std::int64_t max_common_neighbors(const Graph& g) {
  const int n = g.order();
  std::int64_t best = 0;
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex x : g.neighbors(u)) {
      for (Vertex w : g.neighbors(x)) ++count[w];
    }
    for (Vertex w = 0; w < n; ++w) {
      if (w != u) best = std::max<std::int64_t>(best, count[w]);
    }
  }
  return best;
}

struct MotionBound {
  std::string name;
  double value = 0.0;
  std::string provenance;
  std::string note;
};

struct MotionReport {
  std::int64_t n = 0;
  /// Minimum support over all non-identity automorphisms; kNoMover when rigid.
  std::optional<std::int64_t> exact;
  std::optional<std::int64_t> group_order;
  /// Smallest support among the automorphisms found; present whenever one was.
  std::optional<std::int64_t> upper_bound;
  bool rigid = false;
  /// Lower bounds; each is <= exact whenever exact is known.
  std::vector<MotionBound> bounds;
  std::optional<double> thickness;
  /// The distinguishing bound assumes a primitive graph; primitivity is not tested.
  bool primitivity_unchecked = false;
  std::vector<std::string> notes;

  double best_lower_bound() const {
    double best = 0.0;
    for (const auto& b : bounds) best = std::max(best, b.value);
    return best;
  }
};

namespace detail {

struct EnumerationSummary {
  std::optional<std::int64_t> min_support;
  std::int64_t visited = 0;
  bool complete = true;
};

inline EnumerationSummary scan_group(const Graph& g, std::int64_t max_group) {
  EnumerationSummary s;
  for_each_automorphism(g, [&](const std::vector<Vertex>& perm) {
    if (s.visited == max_group) {
      s.complete = false;
      return false;
    }
    ++s.visited;
    const int moved = support_of(perm);
    if (moved > 0 && (!s.min_support || moved < *s.min_support)) s.min_support = moved;
    return true;
  });
  return s;
}

inline std::optional<double> zero_weight_radius(const Graph& g) {
  if (g.order() < 2 || g.order() > kMaxDenseOrder) return std::nullopt;
  const auto values = adjacency_eigenvalues(g);
  return std::max(std::fabs(values[1]), std::fabs(values.back()));
}

/// Clique families must be Aut-invariant for the dual to inherit automorphisms;
/// the full set of Delsarte cliques always is.
inline bool geometry_is_canonical(const Graph& g, const CliqueGeometryReport& geometry) {
  std::size_t delsarte = 0;
  for (const auto& q : enumerate_maximal_cliques(g, static_cast<int>(geometry.delsarte_size))) {
    delsarte += static_cast<std::int64_t>(q.size()) == geometry.delsarte_size ? 1 : 0;
  }
  return delsarte == geometry.cliques.size();
}

inline MotionReport motion_report(const Graph& g, std::int64_t max_group, bool use_dual);

inline void add_dual_transfer(const Graph& g, const IntersectionArray& arr,
                              const SpectralProfile& profile, std::int64_t max_group,
                              MotionReport& report) {
  if (arr.d() < 2) return;
  CliqueGeometryReport geometry;
  try {
    geometry = detect_clique_geometry(g, arr, profile);
  } catch (const Error& e) {
    report.notes.push_back(std::string("dual transfer skipped: ") + e.what());
    return;
  }
  if (!geometry.is_geometric) return;
  if (!geometry_is_canonical(g, geometry)) {
    report.notes.push_back("dual transfer skipped: Delsarte cliques overlap on edges");
    return;
  }
  const DualGraph dual = build_dual(g, geometry);
  const MotionReport inner = motion_report(dual.graph, max_group, false);
  double moved = 0.0;
  std::string source;
  if (inner.exact && !inner.rigid) {
    moved = static_cast<double>(*inner.exact);
    source = "exact dual motion";
  } else if (!inner.rigid) {
    moved = inner.best_lower_bound();
    source = "dual lower bound";
  } else {
    report.notes.push_back("dual transfer skipped: dual graph is rigid");
    return;
  }
  const double gamma = std::min(1.0, moved / static_cast<double>(dual.graph.order()));
  report.bounds.push_back({"dual_transfer",
                           dual_motion_transfer(gamma) * static_cast<double>(g.order()),
                           "dual transfer: gamma n / 2 with motion(dual) >= gamma |dual|",
                           source + " " + std::to_string(static_cast<std::int64_t>(moved)) +
                               " on " + std::to_string(dual.graph.order()) + " cliques"});
}

inline MotionReport motion_report(const Graph& g, std::int64_t max_group, bool use_dual) {
  require(max_group >= 1, "max_group must be at least 1");
  MotionReport report;
  report.n = g.order();
  const auto summary = scan_group(g, max_group);
  report.upper_bound = summary.min_support;
  if (summary.complete) {
    report.group_order = summary.visited;
    report.rigid = !summary.min_support.has_value();
    report.exact = report.rigid ? kNoMover : *summary.min_support;
  } else {
    report.notes.push_back("group larger than " + std::to_string(max_group) +
                           "; exact motion not computed");
  }
  if (g.order() >= 2) {
    report.bounds.push_back({"trivial", 2.0, "a non-identity permutation moves >= 2 points", ""});
  }

  const auto k = g.regular_degree();
  std::optional<IntersectionArray> arr;
  std::optional<SpectralProfile> profile;
  if (g.order() >= 2 && is_connected(g) && k) {
    try {
      arr = check_distance_regular(g);
      profile = eigen_solve(*arr);
    } catch (const Error&) {
      arr.reset();
      profile.reset();
    }
  }

  if (k && *k > 0) {
    const auto xi = profile && arr->d() >= 1 ? std::optional<double>(profile->xi)
                                            : zero_weight_radius(g);
    if (xi) {
      const std::int64_t q = max_common_neighbors(g);
      report.bounds.push_back({"mixing", mixing_lemma_bound(g.order(), *k, *xi, q),
                               "mixing lemma: n(k - xi - q)/k",
                               "xi = " + std::to_string(*xi) + ", q = " + std::to_string(q)});
    }
  }

  if (arr && arr->d() >= 2) {
    DistinguishingBound best;
    int best_j = 0;
    for (int j = 1; j <= arr->d() - 1; ++j) {
      const double alpha = static_cast<double>(std::min(arr->b(j), arr->c(j + 1))) /
                           static_cast<double>(arr->k());
      if (alpha <= 0.0) continue;
      const auto candidate = distinguishing_bound(*arr, alpha, j);
      if (candidate.hypothesis_holds && candidate.value > best.value) {
        best = candidate;
        best_j = j;
      }
    }
    if (best_j > 0) {
      report.primitivity_unchecked = true;
      report.bounds.push_back({"distinguishing", best.value,
                               "distinguishing: alpha n / d with b_j, c_{j+1} >= alpha k",
                               "j = " + std::to_string(best_j) + "; primitivity assumed"});
    }
    if (use_dual) add_dual_transfer(g, *arr, *profile, max_group, report);
  }

  const std::optional<std::int64_t> guaranteed =
      report.exact && !report.rigid ? report.exact : std::nullopt;
  const double alpha =
      guaranteed ? static_cast<double>(*guaranteed) / static_cast<double>(g.order())
                 : report.best_lower_bound() / std::max<double>(1.0, g.order());
  if (g.order() >= 2 && alpha > 0.0 && !report.rigid) {
    report.thickness = thickness_bound(g.order(), std::min(1.0, alpha));
  }
  return report;
}

}  // namespace detail

/// Exact motion by full enumeration when |Aut| <= max_group, plus every
/// lower bound computable from the graph.
inline MotionReport exact_motion(const Graph& g, std::int64_t max_group = kDefaultMaxGroup) {
  return detail::motion_report(g, max_group, true);
}

}  // namespace drg

#endif  // DRG_MOTION_HPP_
