// Copyright 2026 The Spectrawl Authors
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


#include "spectrawl/wl.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spectrawl/error.hpp"
#include "test_graphs.hpp"

namespace spectrawl {
namespace {

using testing::K3;
using testing::Named;
using testing::P3;

// Partition of nodes into color classes, as a set of node sets.
std::set<std::set<int>> Classes(const std::vector<int>& colors) {
  std::map<int, std::set<int>> by_color;
  for (int v = 0; v < static_cast<int>(colors.size()); ++v) by_color[colors[v]].insert(v);
  std::set<std::set<int>> out;
  for (auto& [c, nodes] : by_color) out.insert(nodes);
  return out;
}

bool Refines(const std::vector<int>& finer, const std::vector<int>& coarser) {
  std::map<int, int> parent;
  for (std::size_t v = 0; v < finer.size(); ++v) {
    auto [it, inserted] = parent.emplace(finer[v], coarser[v]);
    if (!inserted && it->second != coarser[v]) return false;
  }
  return true;
}

// Naive refinement over string keys on the disjoint union of two graphs.
std::vector<std::string> NaiveJointSignatures(const Graph& a, const Graph& b) {
  std::vector<std::vector<int>> adj;
  for (const Graph* g : {&a, &b}) {
    const int offset = static_cast<int>(adj.size());
    for (const auto& nbrs : g->Neighbors()) {
      std::vector<int> shifted;
      for (int u : nbrs) shifted.push_back(u + offset);
      adj.push_back(shifted);
    }
  }
  std::vector<std::string> label(adj.size(), "x");
  for (std::size_t round = 0; round <= adj.size(); ++round) {
    std::vector<std::string> next(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) {
      std::vector<std::string> nb;
      for (int u : adj[v]) nb.push_back(label[u]);
      std::sort(nb.begin(), nb.end());
      std::string key = label[v] + "(";
      for (const auto& s : nb) key += s + ",";
      next[v] = key + ")";
    }
    // Compress to keep strings short.
    std::map<std::string, int> ids;
    for (const auto& s : next) ids.emplace(s, 0);
    int id = 0;
    for (auto& [s, i] : ids) i = id++;
    for (std::size_t v = 0; v < adj.size(); ++v) label[v] = std::to_string(ids[next[v]]);
  }
  std::vector<std::string> first(label.begin(), label.begin() + a.size());
  std::vector<std::string> second(label.begin() + a.size(), label.end());
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return {[&] {
            std::string s;
            for (auto& x : first) s += x + ";";
            return s;
          }(),
          [&] {
            std::string s;
            for (auto& x : second) s += x + ";";
            return s;
          }()};
}

TEST(WlRefineTest, PrismUniformSingleClass) {
  const WlColoring c = WlRefine(Named("prism"));
  EXPECT_EQ(c.NumClasses(static_cast<int>(c.colors.size()) - 1), 1);
  EXPECT_EQ(c.stable_at, 1);
}

TEST(WlRefineTest, PathDegreeInit) {
  const WlColoring c = WlRefine(P3(), WlInit::kDegree);
  EXPECT_EQ(Classes(c.final_colors()), (std::set<std::set<int>>{{0, 2}, {1}}));
  EXPECT_EQ(c.stable_at, 1);
  EXPECT_EQ(Classes(c.colors[0]), Classes(c.final_colors()));
}

TEST(WlRefineTest, BihexagonClassesMatchOutputGroups) {
  const WlColoring c = WlRefine(Named("bihexagon"), WlInit::kDegree);
  EXPECT_EQ(Classes(c.final_colors()),
            (std::set<std::set<int>>{{0, 1, 8, 9}, {2, 3, 6, 7}, {4, 5}}));
}

TEST(WlRefineTest, DegreeInitIsOneUniformRound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = RandomGraph(12, 0.3, seed);
    EXPECT_EQ(Classes(WlRefine(g).colors.at(1)),
              Classes(WlRefine(g, WlInit::kDegree).colors.at(0)));
  }
}

TEST(WlRefineTest, DenseColorsAndSignature) {
  const WlColoring c = WlRefine(Named("bipentagon"), WlInit::kDegree);
  for (std::size_t t = 0; t < c.colors.size(); ++t) {
    const int classes = c.NumClasses(static_cast<int>(t));
    for (int col : c.colors[t]) {
      EXPECT_GE(col, 0);
      EXPECT_LT(col, classes);
    }
  }
  std::vector<int> sorted = c.final_colors();
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(c.signature, sorted);
}

TEST(WlRefineTest, MonotoneAndHaltsWithinN) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed * 7 % 63);
    const Graph g = RandomGraph(n, 3.0 / n, seed);
    const WlColoring c = WlRefine(g);
    EXPECT_LE(c.stable_at, n);
    for (std::size_t t = 1; t < c.colors.size(); ++t) {
      EXPECT_TRUE(Refines(c.colors[t], c.colors[t - 1])) << "n=" << n << " t=" << t;
      EXPECT_GE(c.NumClasses(static_cast<int>(t)), c.NumClasses(static_cast<int>(t) - 1));
    }
  }
}

TEST(WlRefineTest, ColorsDoNotDependOnNodeOrder) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = RandomGraph(10, 0.3, seed);
    const auto p = Permutation::Random(10, seed);
    const WlColoring a = WlRefine(g);
    const WlColoring b = WlRefine(ApplyPermutation(g, p));
    for (int v = 0; v < 10; ++v) EXPECT_EQ(a.final_colors()[v], b.final_colors()[p[v]]);
  }
}

TEST(WlDistinguishTest, Examples) {
  EXPECT_EQ(WlDistinguish(Named("prism"), Named("k33")), WlVerdict::kIndistinguishable);
  EXPECT_EQ(WlDistinguish(Named("bihexagon"), Named("bipentagon")),
            WlVerdict::kIndistinguishable);
  EXPECT_EQ(WlDistinguish(P3(), K3()), WlVerdict::kDistinguished);
  EXPECT_EQ(WlDistinguish(P3(), Named("prism")), WlVerdict::kDistinguished);
}

TEST(WlDistinguishTest, AgreesWithNaiveRefinement) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph a = RandomGraph(7, 0.4, seed);
    const Graph b = RandomGraph(7, 0.4, seed + 5000);
    const auto sig = NaiveJointSignatures(a, b);
    const WlVerdict expected =
        sig[0] == sig[1] ? WlVerdict::kIndistinguishable : WlVerdict::kDistinguished;
    EXPECT_EQ(WlDistinguish(a, b), expected) << seed;
    EXPECT_EQ(WlDistinguish(b, a), expected) << seed;
  }
}

TEST(WlDistinguishTest, IsomorphicPairsIndistinguishable) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const Graph g = RandomGraph(n, 0.5, seed);
    const Graph h = ApplyPermutation(g, Permutation::Random(n, seed + 1));
    ASSERT_TRUE(IsIsomorphicBruteForce(g, h));
    EXPECT_EQ(WlDistinguish(g, h), WlVerdict::kIndistinguishable);
  }
}

TEST(WlFeatureTest, RegularGraphsCollapse) {
  FeatureMatrix expected(6, 3);
  expected.col(0).setConstant(3);
  expected.col(1).setConstant(9);
  expected.col(2).setConstant(27);
  EXPECT_EQ(WlFeatureMatrix(Named("prism"), 3), expected);
  EXPECT_EQ(WlFeatureMatrix(Named("k33"), 3), expected);
}

TEST(WlFeatureTest, Path) {
  FeatureMatrix expected(3, 2);
  expected << 1, 2, 2, 2, 1, 2;
  EXPECT_EQ(WlFeatureMatrix(P3(), 2), expected);
  EXPECT_THROW(WlFeatureMatrix(P3(), 0), Error);
}

TEST(WlFeatureTest, PermutationEquivariant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = RandomGraph(9, 0.4, seed);
    const auto p = Permutation::Random(9, seed);
    EXPECT_EQ(WlFeatureMatrix(ApplyPermutation(g, p), 4),
              PermuteRows(WlFeatureMatrix(g, 4), p));
  }
}

}  // namespace
}  // namespace spectrawl
