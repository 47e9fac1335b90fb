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

#include <algorithm>
#include <numeric>
#include <utility>

#include "spectrawl/error.hpp"
#include "spectrawl/random.hpp"

namespace spectrawl {

Graph Graph::FromEdgeList(int n, std::span<const Edge> edges,
                          std::string name) {
  if (n <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "node count must be positive, got " + std::to_string(n));
  }
  Matrix a = Matrix::Zero(n, n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") with n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "node " + std::to_string(e.u));
    }
    if (a(e.u, e.v) != 0.0) {
      throw Error(ErrorCode::kDuplicateEdge, "(" + std::to_string(e.u) + "," +
                                                 std::to_string(e.v) + ")");
    }
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return Graph(std::move(a), std::move(name));
}

Graph Graph::FromAdjacency(Matrix adjacency, std::string name) {
  const auto n = adjacency.rows();
  if (n == 0 || adjacency.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "adjacency must be a non-empty square matrix");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (adjacency(i, i) != 0.0) {
      throw Error(ErrorCode::kSelfLoop, "node " + std::to_string(i));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = adjacency(i, j);
      if (v != 0.0 && v != 1.0) {
        throw Error(ErrorCode::kInvalidArgument, "adjacency entries must be 0/1");
      }
      if (v != adjacency(j, i)) {
        throw Error(ErrorCode::kInvalidArgument, "adjacency must be symmetric");
      }
    }
  }
  return Graph(std::move(adjacency), std::move(name));
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (HasEdge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::EdgeCount() const {
  return static_cast<int>(adjacency_.sum() / 2.0);
}

Vector Graph::Degrees() const { return adjacency_.rowwise().sum(); }

std::vector<std::vector<int>> Graph::Neighbors() const {
  std::vector<std::vector<int>> out(size());
  for (int u = 0; u < size(); ++u) {
    for (int v = 0; v < size(); ++v) {
      if (HasEdge(u, v)) out[u].push_back(v);
    }
  }
  return out;
}

Graph Graph::WithName(std::string name) const {
  return Graph(adjacency_, std::move(name));
}

Permutation::Permutation(std::vector<int> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (int target : mapping_) {
    if (target < 0 || target >= size() || seen[target]) {
      throw Error(ErrorCode::kInvalidArgument, "mapping is not a bijection");
    }
    seen[target] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::Random(int n, std::uint64_t seed) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  SplitMix64 rng(seed);
  // Fisher-Yates
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.Below(static_cast<std::uint64_t>(i) + 1));
    std::swap(m[i], m[j]);
  }
  return Permutation(std::move(m));
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(mapping_.size());
  for (int i = 0; i < size(); ++i) inv[mapping_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::Compose(const Permutation& outer,
                                 const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw Error(ErrorCode::kLengthMismatch, "cannot compose permutations");
  }
  std::vector<int> m(inner.size());
  for (int i = 0; i < inner.size(); ++i) m[i] = outer[inner[i]];
  return Permutation(std::move(m));
}

Graph ApplyPermutation(const Graph& g, const Permutation& p) {
  const int n = g.size();
  if (p.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "permutation length " + std::to_string(p.size()) +
                    " vs graph size " + std::to_string(n));
  }
  Matrix b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(p[i], p[j]) = g.adjacency()(i, j);
  }
  return Graph::FromAdjacency(std::move(b), g.name());
}

FeatureMatrix PermuteRows(const FeatureMatrix& x, const Permutation& p) {
  if (p.size() != x.rows()) {
    throw Error(ErrorCode::kLengthMismatch, "permutation length vs row count");
  }
  FeatureMatrix out(x.rows(), x.cols());
  for (int i = 0; i < p.size(); ++i) out.row(p[i]) = x.row(i);
  return out;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g1, const Graph& g2)
      : g1_(g1), g2_(g2), map_(g1.size(), -1), used_(g1.size(), false) {
    d1_ = g1.Degrees();
    d2_ = g2.Degrees();
  }

  bool Run() {
    std::vector<double> s1(d1_.data(), d1_.data() + d1_.size());
    std::vector<double> s2(d2_.data(), d2_.data() + d2_.size());
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
    return Extend(0);
  }

 private:
  bool Extend(int i) {
    const int n = g1_.size();
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used_[cand] || d1_[i] != d2_[cand]) continue;
      bool consistent = true;
      for (int j = 0; j < i && consistent; ++j) {
        consistent = g1_.HasEdge(i, j) == g2_.HasEdge(cand, map_[j]);
      }
      if (!consistent) continue;
      map_[i] = cand;
      used_[cand] = true;
      if (Extend(i + 1)) return true;
      used_[cand] = false;
    }
    map_[i] = -1;
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  Vector d1_;
  Vector d2_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

bool IsIsomorphicBruteForce(const Graph& g1, const Graph& g2) {
  if (g1.size() != g2.size()) {
    throw Error(ErrorCode::kSizeMismatch, std::to_string(g1.size()) + " vs " +
                                              std::to_string(g2.size()));
  }
  if (g1.size() > kBruteForceMaxNodes) {
    throw Error(ErrorCode::kTooLarge,
                "brute-force oracle is capped at " +
                    std::to_string(kBruteForceMaxNodes) + " nodes");
  }
  if (g1.EdgeCount() != g2.EdgeCount()) return false;
  return IsomorphismSearch(g1, g2).Run();
}

Graph RandomGraph(int n, double edge_probability, std::uint64_t seed,
                  std::string name) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Uniform() < edge_probability) edges.push_back({u, v});
    }
  }
  return Graph::FromEdgeList(n, edges, std::move(name));
}

}  // namespace spectrawl
