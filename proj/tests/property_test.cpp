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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "drg/automorphism.hpp"
#include "drg/cliques.hpp"
#include "drg/generators.hpp"
#include "drg/geometry.hpp"
#include "drg/graph_io.hpp"
#include "drg/motion.hpp"
#include "drg/params.hpp"
#include "drg/scan.hpp"
#include "drg/spectral.hpp"
#include "oracles.hpp"

namespace {

using namespace drg;

constexpr std::uint64_t kSeed = 20261015;

std::vector<Graph> family_sample() {
  return {johnson_graph(6, 2),  johnson_graph(7, 3), hamming_graph(3, 3), hamming_graph(2, 5),
          petersen_graph(),     shrikhande_graph(),  cycle_graph(9),      cocktail_party_graph(4),
          doob_graph(0, 1),     hamming_graph(4, 2)};
}

std::map<std::size_t, std::size_t> clique_size_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& q : enumerate_maximal_cliques(g, 1)) ++histogram[q.size()];
  return histogram;
}

TEST(RelabelInvariance, ArraySpectrumGeometryCliques) {
  oracle::Rng rng(kSeed);
  for (const auto& g : family_sample()) {
    const auto arr = check_distance_regular(g);
    const auto profile = eigen_solve(arr);
    const auto geometry = detect_clique_geometry(g, arr, profile);
    const auto cliques = clique_size_histogram(g);
    const auto dense = oracle::eigenvalues(g);
    for (int trial = 0; trial < 4; ++trial) {
      const auto h = oracle::relabel(g, rng.permutation(g.order()));
      EXPECT_EQ(check_distance_regular(h), arr) << g.label();
      const auto moved = eigen_solve(check_distance_regular(h));
      EXPECT_EQ(moved.eigenvalues, profile.eigenvalues) << g.label();
      EXPECT_EQ(moved.multiplicities, profile.multiplicities) << g.label();
      const auto relabelled = detect_clique_geometry(h, arr, profile);
      EXPECT_EQ(relabelled.is_geometric, geometry.is_geometric) << g.label();
      EXPECT_EQ(relabelled.m, geometry.m) << g.label();
      EXPECT_EQ(relabelled.psi, geometry.psi) << g.label();
      EXPECT_EQ(relabelled.tau, geometry.tau) << g.label();
      EXPECT_EQ(relabelled.cliques.size(), geometry.cliques.size()) << g.label();
      EXPECT_EQ(clique_size_histogram(h), cliques) << g.label();
      const auto values = oracle::eigenvalues(h);
      for (std::size_t i = 0; i < values.size(); ++i) EXPECT_NEAR(values[i], dense[i], 1e-8);
    }
  }
}

TEST(RelabelInvariance, Motion) {
  oracle::Rng rng(kSeed + 1);
  for (const auto& g : {johnson_graph(6, 2), hamming_graph(2, 4), petersen_graph(),
                        shrikhande_graph(), cycle_graph(11), oracle::asymmetric_six()}) {
    const auto base = exact_motion(g);
    for (int trial = 0; trial < 3; ++trial) {
      const auto r = exact_motion(oracle::relabel(g, rng.permutation(g.order())));
      EXPECT_EQ(r.exact, base.exact) << g.label();
      EXPECT_EQ(r.group_order, base.group_order) << g.label();
      EXPECT_EQ(r.rigid, base.rigid) << g.label();
      ASSERT_EQ(r.bounds.size(), base.bounds.size()) << g.label();
      for (std::size_t i = 0; i < r.bounds.size(); ++i) {
        EXPECT_EQ(r.bounds[i].name, base.bounds[i].name);
        EXPECT_NEAR(r.bounds[i].value, base.bounds[i].value, 1e-9) << r.bounds[i].name;
      }
    }
  }
}

TEST(RandomGraphs, MaximalCliquesMatchBruteForce) {
  oracle::Rng rng(kSeed + 2);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform(1, 14);
    const double density = 0.15 + 0.7 * rng.unit();
    const auto g = rng.random_graph(n, density);
    const int min_size = rng.uniform(1, 4);
    auto found = enumerate_maximal_cliques(g, min_size);
    for (auto& q : found) {
      std::sort(q.begin(), q.end());
      for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = i + 1; j < q.size(); ++j) EXPECT_TRUE(g.adjacent(q[i], q[j]));
      }
    }
    std::sort(found.begin(), found.end());
    EXPECT_EQ(found, oracle::brute_force_maximal_cliques(g, min_size)) << "trial " << trial;
  }
}

TEST(RandomGraphs, AutomorphismGroupMatchesBruteForceAndIsClosed) {
  oracle::Rng rng(kSeed + 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(2, 9);
    const auto g = rng.random_graph(n, 0.2 + 0.6 * rng.unit());
    const auto expected = oracle::brute_force_automorphisms(g);
    const auto list = enumerate_automorphisms(g, 100000);
    ASSERT_FALSE(list.truncated);
    EXPECT_EQ(list.group_order, expected.order) << "trial " << trial;
    std::set<std::vector<Vertex>> group;
    std::vector<Vertex> identity(n);
    for (int v = 0; v < n; ++v) identity[v] = v;
    group.insert(identity);
    int min_support = 0;
    for (const auto& a : list.elements) {
      EXPECT_TRUE(preserves_adjacency(g, a.perm));
      group.insert(a.perm);
      if (min_support == 0 || a.support < min_support) min_support = a.support;
    }
    EXPECT_EQ(min_support, expected.min_support);
    if (group.size() > 300) continue;
    for (const auto& p : group) {
      for (const auto& q : group) {
        std::vector<Vertex> composed(n);
        for (int v = 0; v < n; ++v) composed[v] = p[q[v]];
        EXPECT_TRUE(group.count(composed)) << "trial " << trial;
      }
    }
  }
}

TEST(RandomGraphs, DistanceRegularityAgreesWithCounting) {
  oracle::Rng rng(kSeed + 4);
  int regular_hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform(2, 9);
    const auto g = rng.random_graph(n, 0.3 + 0.6 * rng.unit());
    const auto expected = oracle::brute_force_array(g);
    try {
      const auto arr = check_distance_regular(g);
      ASSERT_TRUE(expected.has_value()) << graph_to_string(g);
      EXPECT_EQ(arr.b_sequence(), expected->b);
      EXPECT_EQ(arr.c_sequence(), expected->c);
      ++regular_hits;
    } catch (const Error& e) {
      EXPECT_FALSE(expected.has_value()) << e.what() << "\n" << graph_to_string(g);
    }
  }
  EXPECT_GT(regular_hits, 0);
}

TEST(RandomGraphs, TextRoundTrip) {
  oracle::Rng rng(kSeed + 5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = rng.random_graph(rng.uniform(1, 30), rng.unit());
    EXPECT_EQ(graph_from_string(graph_to_string(g)), g);
  }
}

// Sum f = n, sum f theta = tr A = 0, sum f theta^2 = tr A^2 = nk.
TEST(ScanCorpus, SpectralTraceIdentities) {
  for (int d : {2, 3}) {
    int records = 0;
    scan_arrays(d, d == 2 ? 20 : 12, ClassifierConfig{}, [&](const ScanRecord& r) {
      ++records;
      const auto& p = r.profile;
      double count = 0.0, first = 0.0, second = 0.0;
      for (std::size_t j = 0; j < p.eigenvalues.size(); ++j) {
        const double f = static_cast<double>(p.multiplicities[j]);
        count += f;
        first += f * p.eigenvalues[j];
        second += f * p.eigenvalues[j] * p.eigenvalues[j];
      }
      const double n = static_cast<double>(r.array.n());
      EXPECT_NEAR(count, n, 1e-9) << r.array.to_string();
      EXPECT_NEAR(first, 0.0, 1e-6 * n) << r.array.to_string();
      EXPECT_NEAR(second, n * r.array.k(), 1e-6 * n * r.array.k()) << r.array.to_string();
      EXPECT_EQ(p.eigenvalues.size(), static_cast<std::size_t>(d) + 1);
    });
    EXPECT_GT(records, 0);
  }
}

TEST(ScanCorpus, InferredGeometriesSatisfyIdentities) {
  int geometric = 0;
  for (int d : {2, 3}) {
    scan_arrays(d, d == 2 ? 24 : 14, ClassifierConfig{}, [&](const ScanRecord& r) {
      if (!r.geometry.is_geometric) return;
      ++geometric;
      for (const auto& check : verify_geometric_identities(r.geometry, r.array)) {
        EXPECT_TRUE(check.holds) << r.array.to_string() << " " << check.name;
      }
      EXPECT_EQ(r.geometry.delsarte_size * r.geometry.m, r.array.k() + r.geometry.m);
    });
  }
  EXPECT_GT(geometric, 0);
}

TEST(ScanCorpus, OrderIsLexicographicAndUnique) {
  std::vector<std::vector<std::int64_t>> keys;
  scan_arrays(3, 12, ClassifierConfig{}, [&](const ScanRecord& r) {
    std::vector<std::int64_t> key;
    key.push_back(r.array.k());
    for (int i = 1; i < r.array.d(); ++i) {
      key.push_back(r.array.b(i));
      key.push_back(r.array.c(i + 1));
    }
    keys.push_back(key);
  });
  ASSERT_FALSE(keys.empty());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
}

TEST(InequalityReports, SlackSignMatchesVerdict) {
  oracle::Rng rng(kSeed + 6);
  for (int trial = 0; trial < 500; ++trial) {
    const double lhs = rng.uniform(-20, 20) / 4.0;
    const double rhs = rng.uniform(-20, 20) / 4.0;
    const auto ge = InequalityReport::at_least("ge", lhs, rhs);
    EXPECT_EQ(ge.holds, ge.slack >= 0.0);
    EXPECT_EQ(ge.slack, lhs - rhs);
    const auto le = InequalityReport::at_most("le", lhs, rhs);
    EXPECT_EQ(le.holds, le.slack >= 0.0);
    EXPECT_EQ(le.lhs, lhs);
    EXPECT_EQ(le.rhs, rhs);
    const auto strict = InequalityReport::at_least("gt", lhs, rhs, true);
    EXPECT_EQ(strict.holds, strict.slack > 0.0);
  }
}

TEST(InequalityReports, ArrayChecksAreSignConsistent) {
  for (int d = 2; d <= 3; ++d) {
    scan_arrays(d, 12, ClassifierConfig{}, [&](const ScanRecord& r) {
      for (const auto& check : feasibility_check(r.array)) {
        if (!check.applicable) continue;
        EXPECT_TRUE(check.holds) << r.array.to_string() << " " << check.name;
      }
      for (const auto& check : basic_inequalities(r.array, false)) {
        if (!check.applicable || check.name == "c3_bound") continue;
        EXPECT_EQ(check.holds, check.slack >= 0.0) << r.array.to_string() << " " << check.name;
      }
    });
  }
}

}  // namespace
