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

#include <cmath>
#include <string>
#include <vector>

#include "drg/automorphism.hpp"
#include "drg/generators.hpp"
#include "drg/motion.hpp"
#include "drg/params.hpp"
#include "oracles.hpp"

namespace {

using namespace drg;

const MotionBound* named(const MotionReport& r, const std::string& name) {
  for (const auto& b : r.bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

void expect_bounds_sound(const MotionReport& r, const std::string& label) {
  ASSERT_TRUE(r.exact.has_value()) << label;
  for (const auto& b : r.bounds) {
    EXPECT_LE(b.value, static_cast<double>(*r.exact) + 1e-9) << label << " " << b.name;
    EXPECT_GE(b.value, 0.0) << label << " " << b.name;
  }
}

struct ExactCase {
  Graph graph;
  std::int64_t motion;
  std::int64_t order;
};

// |Aut J(s,2)| = s!, |Aut H(2,s)| = 2 (s!)^2.
std::vector<ExactCase> reference_cases() {
  return {{johnson_graph(5, 2), 6, 120},
          {johnson_graph(8, 2), 12, 40320},
          {hamming_graph(2, 3), 6, 72},
          {hamming_graph(2, 4), 8, 1152}};
}

TEST(ExactMotion, ReferenceGraphs) {
  for (const auto& c : reference_cases()) {
    const auto r = exact_motion(c.graph);
    ASSERT_TRUE(r.exact.has_value()) << c.graph.label();
    EXPECT_EQ(*r.exact, c.motion) << c.graph.label();
    EXPECT_EQ(r.group_order, c.order) << c.graph.label();
    EXPECT_EQ(r.upper_bound, c.motion) << c.graph.label();
    EXPECT_FALSE(r.rigid);
    EXPECT_EQ(r.n, c.graph.order());
  }
}

TEST(ExactMotion, GroupOrdersMatchFactorialFormulas) {
  for (int s = 5; s <= 8; ++s) {
    const auto r = exact_motion(johnson_graph(s, 2));
    EXPECT_EQ(r.group_order, oracle::factorial(s)) << s;
    EXPECT_EQ(r.exact, 2 * (s - 2)) << s;
  }
  for (int s = 3; s <= 5; ++s) {
    const auto r = exact_motion(hamming_graph(2, s));
    EXPECT_EQ(r.group_order, 2 * oracle::factorial(s) * oracle::factorial(s)) << s;
    EXPECT_EQ(r.exact, 2 * s) << s;
  }
  for (int n = 3; n <= 12; ++n) {
    const auto r = exact_motion(cycle_graph(n));
    EXPECT_EQ(r.group_order, 2 * n) << n;
    // A reflection fixes one or two vertices.
    EXPECT_EQ(r.exact, n % 2 == 1 ? n - 1 : n - 2) << n;
  }
}

TEST(ExactMotion, AgreesWithBruteForceOracle) {
  std::vector<Graph> graphs = {petersen_graph(),        cycle_graph(7),
                               complete_graph(5),       oracle::prism(),
                               oracle::path(6),         hamming_graph(3, 2),
                               cocktail_party_graph(3), oracle::complete_bipartite(3, 4),
                               johnson_graph(5, 2)};
  oracle::Rng rng(20261015);
  for (int i = 0; i < 25; ++i) graphs.push_back(rng.random_graph(rng.uniform(4, 10), 0.45));
  for (const auto& g : graphs) {
    const auto expected = oracle::brute_force_automorphisms(g);
    const auto r = exact_motion(g);
    ASSERT_TRUE(r.group_order.has_value());
    EXPECT_EQ(*r.group_order, expected.order) << g.label();
    if (expected.min_support == 0) {
      EXPECT_TRUE(r.rigid);
      EXPECT_EQ(r.exact, kNoMover);
    } else {
      EXPECT_EQ(r.exact, expected.min_support) << g.label();
      expect_bounds_sound(r, g.label());
    }
  }
}

TEST(BoundSoundness, ReferenceGraphs) {
  for (const auto& c : reference_cases()) {
    const auto r = exact_motion(c.graph);
    expect_bounds_sound(r, c.graph.label());
    ASSERT_NE(named(r, "mixing"), nullptr);
    EXPECT_NE(named(r, "trivial"), nullptr);
  }
}

TEST(BoundSoundness, JohnsonEightTwoMixingValue) {
  // xi = max(|b1 - 1|, |theta_min|) = 4 and q = lambda = 6.
  const auto g = johnson_graph(8, 2);
  EXPECT_EQ(max_common_neighbors(g), 6);
  EXPECT_NEAR(mixing_lemma_bound(28, 12, 4.0, 6), 14.0 / 3.0, 1e-12);
  const auto r = exact_motion(g);
  ASSERT_NE(named(r, "mixing"), nullptr);
  EXPECT_NEAR(named(r, "mixing")->value, 14.0 / 3.0, 1e-9);
  EXPECT_LE(named(r, "mixing")->value, 12.0);
}

TEST(BoundSoundness, JohnsonFiveTwoBreakdown) {
  const auto r = exact_motion(johnson_graph(5, 2));
  EXPECT_DOUBLE_EQ(named(r, "trivial")->value, 2.0);
  EXPECT_DOUBLE_EQ(named(r, "mixing")->value, 0.0);
  ASSERT_NE(named(r, "distinguishing"), nullptr);
  EXPECT_NEAR(named(r, "distinguishing")->value, 5.0 / 3.0, 1e-9);
  EXPECT_TRUE(r.primitivity_unchecked);
  ASSERT_NE(named(r, "dual_transfer"), nullptr);
  EXPECT_NEAR(named(r, "dual_transfer")->value, 2.0, 1e-9);
  EXPECT_NEAR(r.best_lower_bound(), 2.0, 1e-9);
}

TEST(BoundSoundness, DistinguishingOnFamilyGrid) {
  for (int s = 5; s <= 8; ++s) {
    const auto arr = johnson_array(s, 2);
    const auto exact = static_cast<double>(2 * (s - 2));
    for (double alpha : {0.05, 0.1, 0.2, 1.0 / 3.0, 0.5}) {
      const auto b = distinguishing_bound(arr, alpha, 1);
      EXPECT_LE(b.value, exact + 1e-9);
      if (b.hypothesis_holds) {
        EXPECT_NEAR(b.value, alpha * arr.n() / 2.0, 1e-9);
      } else {
        EXPECT_EQ(b.value, 0.0);
        EXPECT_FALSE(b.note.empty());
      }
    }
  }
}

TEST(BoundSoundness, DistinguishingHypothesisFailure) {
  // H(2,3): b1 = 2, c2 = 2, k = 4.
  const auto arr = hamming_array(2, 3);
  EXPECT_TRUE(distinguishing_bound(arr, 0.5, 1).hypothesis_holds);
  const auto b = distinguishing_bound(arr, 0.75, 1);
  EXPECT_FALSE(b.hypothesis_holds);
  EXPECT_EQ(b.value, 0.0);
  EXPECT_THROW(distinguishing_bound(arr, 0.5, 0), Error);
  EXPECT_THROW(distinguishing_bound(arr, 0.5, 2), Error);
  EXPECT_THROW(distinguishing_bound(arr, 0.0, 1), Error);
}

TEST(MotionHelpers, MixingBoundClampsAtZero) {
  EXPECT_EQ(mixing_lemma_bound(10, 3, 2.0, 1), 0.0);
  EXPECT_NEAR(mixing_lemma_bound(100, 10, 2.0, 3), 50.0, 1e-12);
  EXPECT_THROW(mixing_lemma_bound(10, 0, 1.0, 0), Error);
  EXPECT_THROW(mixing_lemma_bound(10, 3, -1.0, 0), Error);
}

TEST(MotionHelpers, DualTransferHalves) {
  EXPECT_DOUBLE_EQ(dual_motion_transfer(0.4), 0.2);
  EXPECT_DOUBLE_EQ(dual_motion_transfer(1.0), 0.5);
  EXPECT_THROW(dual_motion_transfer(1.5), Error);
  EXPECT_THROW(dual_motion_transfer(-0.1), Error);
}

TEST(MotionHelpers, ThicknessBound) {
  EXPECT_NEAR(thickness_bound(static_cast<std::int64_t>(std::llround(std::exp(3.0))), 1.0),
              3.0 * std::log(20.0), 1e-12);
  EXPECT_NEAR(thickness_bound(100, 0.125), 24.0 * std::log(100.0), 1e-9);
  EXPECT_NEAR(thickness_bound(100, 0.125), 110.52, 0.01);
  double previous = thickness_bound(1000, 0.01);
  for (double alpha = 0.02; alpha <= 1.0; alpha += 0.01) {
    const double current = thickness_bound(1000, alpha);
    EXPECT_LT(current, previous);
    previous = current;
  }
  EXPECT_THROW(thickness_bound(1, 0.5), Error);
  EXPECT_THROW(thickness_bound(10, 0.0), Error);
  EXPECT_THROW(thickness_bound(10, 1.5), Error);
}

TEST(ExactMotion, ThicknessUsesExactFraction) {
  const auto r = exact_motion(johnson_graph(5, 2));
  ASSERT_TRUE(r.thickness.has_value());
  EXPECT_NEAR(*r.thickness, thickness_bound(10, 0.6), 1e-12);
}

TEST(ExactMotion, RigidGraph) {
  const auto r = exact_motion(oracle::asymmetric_six());
  EXPECT_TRUE(r.rigid);
  EXPECT_EQ(r.exact, kNoMover);
  EXPECT_EQ(r.group_order, 1);
  EXPECT_FALSE(r.upper_bound.has_value());
  EXPECT_FALSE(r.thickness.has_value());
  EXPECT_EQ(oracle::brute_force_automorphisms(oracle::asymmetric_six()).order, 1);
}

TEST(ExactMotion, TruncatedEnumeration) {
  const auto r = exact_motion(johnson_graph(8, 2), 100);
  EXPECT_FALSE(r.exact.has_value());
  EXPECT_FALSE(r.group_order.has_value());
  EXPECT_FALSE(r.rigid);
  ASSERT_TRUE(r.upper_bound.has_value());
  EXPECT_GE(*r.upper_bound, 12);
  EXPECT_FALSE(r.notes.empty());
  EXPECT_LE(r.best_lower_bound(), 12.0);
  EXPECT_THROW(exact_motion(johnson_graph(5, 2), 0), Error);
}

TEST(Automorphisms, PreserveAdjacencyAndCountGroup) {
  for (const auto& g : {petersen_graph(), hamming_graph(2, 3), cycle_graph(9)}) {
    const auto list = enumerate_automorphisms(g, 1000);
    ASSERT_FALSE(list.truncated);
    ASSERT_TRUE(list.group_order.has_value());
    EXPECT_EQ(*list.group_order, oracle::brute_force_automorphisms(g).order);
    EXPECT_EQ(static_cast<std::int64_t>(list.elements.size()), *list.group_order - 1);
    for (const auto& a : list.elements) {
      EXPECT_TRUE(preserves_adjacency(g, a.perm));
      EXPECT_EQ(a.support, support_of(a.perm));
      EXPECT_GT(a.support, 0);
    }
  }
  const auto truncated = enumerate_automorphisms(petersen_graph(), 10);
  EXPECT_TRUE(truncated.truncated);
  EXPECT_EQ(truncated.elements.size(), 10u);
  EXPECT_FALSE(truncated.group_order.has_value());
}

TEST(Automorphisms, VisitorStopsEarly) {
  int visits = 0;
  for_each_automorphism(johnson_graph(6, 2), [&](const std::vector<Vertex>&) {
    ++visits;
    return visits < 5;
  });
  EXPECT_EQ(visits, 5);
  std::vector<Vertex> swap = {1, 0, 2};
  EXPECT_EQ(support_of(swap), 2);
  EXPECT_FALSE(preserves_adjacency(oracle::path(3), swap));
}

}  // namespace
