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


#include "spectrawl/graph.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "spectrawl/corpus.hpp"
#include "spectrawl/error.hpp"
#include "spectrawl/graph_io.hpp"
#include "test_graphs.hpp"

namespace spectrawl {
namespace {

using testing::K3;
using testing::Named;
using testing::P3;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no spectrawl::Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(GraphTest, TriangleIsComplete) {
  const Graph g = K3();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(g.adjacency()(i, j), i == j ? 0.0 : 1.0);
  }
}

TEST(GraphTest, RejectsBadEdges) {
  EXPECT_EQ(CodeOf([] { Graph::FromEdgeList(3, {{0, 0}}); }), ErrorCode::kSelfLoop);
  EXPECT_EQ(CodeOf([] { Graph::FromEdgeList(3, {{0, 1}, {1, 0}}); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(CodeOf([] { Graph::FromEdgeList(3, {{0, 3}}); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([] { Graph::FromEdgeList(3, {{-1, 2}}); }),
            ErrorCode::kIndexOutOfRange);
}

TEST(GraphTest, FromAdjacencyValidates) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = 1;
  EXPECT_THROW(Graph::FromAdjacency(a), Error);  // asymmetric
  a(1, 0) = 1;
  EXPECT_NO_THROW(Graph::FromAdjacency(a));
  a(0, 0) = 1;
  EXPECT_THROW(Graph::FromAdjacency(a), Error);
  Matrix b = Matrix::Zero(2, 2);
  b(0, 1) = b(1, 0) = 2;
  EXPECT_THROW(Graph::FromAdjacency(b), Error);
}

TEST(CorpusTest, Invariants) {
  std::set<std::string> keys;
  for (const auto& entry : Corpus()) {
    EXPECT_TRUE(keys.insert(entry.key).second) << entry.key;
    const Matrix& a = entry.graph.adjacency();
    EXPECT_TRUE(a.isApprox(a.transpose()));
    EXPECT_EQ(a.diagonal().cwiseAbs().sum(), 0.0);
    EXPECT_TRUE((a.array() == 0.0 || a.array() == 1.0).all());
    EXPECT_FALSE(entry.provenance.empty());
  }
  EXPECT_EQ(keys, (std::set<std::string>{"prism", "k33", "bihexagon", "bipentagon"}));
  EXPECT_FALSE(CorpusGraph("petersen").has_value());
}

TEST(CorpusTest, Degrees) {
  EXPECT_TRUE((Named("prism").Degrees().array() == 3.0).all());
  EXPECT_TRUE((Named("k33").Degrees().array() == 3.0).all());
  const Vector d = Named("bihexagon").Degrees();
  for (int v = 0; v < 10; ++v) EXPECT_EQ(d[v], (v == 4 || v == 5) ? 3.0 : 2.0);
  EXPECT_EQ(Named("bihexagon").EdgeCount(), 11);
  EXPECT_EQ(Named("bipentagon").EdgeCount(), 11);
}

TEST(CorpusTest, BipartiteHasNoTriangles) {
  const Matrix a = Named("k33").adjacency();
  EXPECT_EQ((a * a * a).trace(), 0.0);
}

TEST(PermutationTest, ValidatesBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), Error);
  EXPECT_THROW(Permutation({0, 3, 1}), Error);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(PermutationTest, IdentityLeavesGraphUnchanged) {
  const Graph g = Named("bipentagon");
  EXPECT_EQ(ApplyPermutation(g, Permutation::Identity(10)), g);
}

TEST(PermutationTest, CyclicShiftOfTriangle) {
  EXPECT_EQ(ApplyPermutation(K3(), Permutation({1, 2, 0})), K3());
}

TEST(PermutationTest, MapsEntries) {
  const Graph g = P3();
  const Permutation p({2, 0, 1});
  const Graph h = ApplyPermutation(g, p);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(h.adjacency()(p[i], p[j]), g.adjacency()(i, j));
    }
  }
  EXPECT_THROW(ApplyPermutation(g, Permutation::Identity(4)), Error);
}

TEST(PermutationTest, SwapInPrismStaysIsomorphic) {
  const Graph g = Named("prism");
  EXPECT_TRUE(IsIsomorphicBruteForce(g, ApplyPermutation(g, Permutation({3, 1, 2, 0, 4, 5}))));
}

TEST(PermutationTest, ComposeMatchesSequentialApplication) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const Graph g = RandomGraph(n, 0.4, seed);
    const auto p = Permutation::Random(n, seed * 3 + 1);
    const auto q = Permutation::Random(n, seed * 3 + 2);
    EXPECT_EQ(ApplyPermutation(ApplyPermutation(g, p), q),
              ApplyPermutation(g, Permutation::Compose(q, p)));
    EXPECT_EQ(ApplyPermutation(ApplyPermutation(g, p), p.Inverse()), g);
  }
}

TEST(PermutationTest, RandomIsSeeded) {
  EXPECT_EQ(Permutation::Random(20, 7).mapping(), Permutation::Random(20, 7).mapping());
  EXPECT_NE(Permutation::Random(20, 7).mapping(), Permutation::Random(20, 8).mapping());
}

TEST(PermutationTest, PermuteRowsFollowsNodes) {
  FeatureMatrix x(3, 2);
  x << 1, 2, 3, 4, 5, 6;
  const Permutation p({2, 0, 1});
  const FeatureMatrix y = PermuteRows(x, p);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(y.row(p[i]), x.row(i));
}

TEST(IsomorphismTest, CorpusPairsAreNotIsomorphic) {
  EXPECT_FALSE(IsIsomorphicBruteForce(Named("prism"), Named("k33")));
  EXPECT_FALSE(IsIsomorphicBruteForce(Named("bihexagon"), Named("bipentagon")));
  EXPECT_FALSE(IsIsomorphicBruteForce(P3(), K3()));
}

TEST(IsomorphismTest, ReflexiveAndPermutationInvariant) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const Graph g = RandomGraph(n, 0.5, seed);
    const Graph h = RandomGraph(n, 0.5, seed + 1000);
    EXPECT_TRUE(IsIsomorphicBruteForce(g, g));
    const auto p = Permutation::Random(n, seed);
    const bool base = IsIsomorphicBruteForce(g, h);
    EXPECT_EQ(IsIsomorphicBruteForce(ApplyPermutation(g, p), h), base);
    EXPECT_EQ(IsIsomorphicBruteForce(g, ApplyPermutation(h, p)), base);
  }
}

TEST(IsomorphismTest, Limits) {
  EXPECT_EQ(CodeOf([] { IsIsomorphicBruteForce(K3(), Named("prism")); }),
            ErrorCode::kSizeMismatch);
  const Graph big = RandomGraph(11, 0.3, 1);
  EXPECT_EQ(CodeOf([&] { IsIsomorphicBruteForce(big, big); }), ErrorCode::kTooLarge);
}

TEST(GraphIoTest, RoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "spectrawl_io_test";
  std::filesystem::create_directories(dir);
  for (const auto& entry : Corpus()) {
    SaveGraph(entry.graph, dir / (entry.key + ".txt"));
    const Graph back = LoadGraph(dir / (entry.key + ".txt"));
    EXPECT_EQ(back, entry.graph);
    EXPECT_EQ(back.name(), entry.key);
  }
  std::filesystem::remove_all(dir);
}

TEST(GraphIoTest, ParsesCommentsAndBlankLines) {
  const Graph g = ParseEdgeList("# triangle\n\n3\n0 1\n# mid\n1 2\n0 2\n");
  EXPECT_EQ(g, K3());
}

struct BadInput {
  std::string text;
  int line;
};

TEST(GraphIoTest, ParseErrorsCarryLineNumbers) {
  const std::vector<BadInput> cases = {
      {"3\n0 0\n", 2},       {"3\n0 x\n", 2},   {"3\n0 1\n1 0\n", 3},
      {"3\n0 1\n0 1\n", 3},  {"3\n0 5\n", 2},   {"x\n", 1},
      {"0\n", 1},            {"3\n2 1\n", 2},   {"3\n0 1 2\n", 2},
  };
  for (const auto& c : cases) {
    try {
      ParseEdgeList(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << c.text;
      ASSERT_TRUE(e.line().has_value()) << c.text;
      EXPECT_EQ(*e.line(), c.line) << c.text;
    }
  }
  EXPECT_THROW(ParseEdgeList(""), Error);
}

TEST(GraphIoTest, MissingFileIsIoError) {
  EXPECT_EQ(CodeOf([] { LoadGraph("/nonexistent/graph.txt"); }), ErrorCode::kIoError);
}

}  // namespace
}  // namespace spectrawl
