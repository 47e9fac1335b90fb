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

#ifndef SPECTRAWL_GRAPH_HPP_
#define SPECTRAWL_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spectrawl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// N x D real node features; row i belongs to node i.
using FeatureMatrix = Eigen::MatrixXd;

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph held as a dense symmetric 0/1 adjacency matrix with
// zero diagonal. Immutable after construction.
class Graph {
 public:
  // Throws SelfLoop, DuplicateEdge or IndexOutOfRange.
  static Graph FromEdgeList(int n, std::span<const Edge> edges,
                            std::string name = {});
  static Graph FromEdgeList(int n, std::initializer_list<Edge> edges,
                            std::string name = {}) {
    return FromEdgeList(n, std::span<const Edge>(edges.begin(), edges.size()),
                        std::move(name));
  }

  // Validates symmetry, binary entries and zero diagonal.
  static Graph FromAdjacency(Matrix adjacency, std::string name = {});

  int size() const { return static_cast<int>(adjacency_.rows()); }
  const Matrix& adjacency() const { return adjacency_; }
  const std::string& name() const { return name_; }

  bool HasEdge(int u, int v) const { return adjacency_(u, v) != 0.0; }
  // Edges with u < v in lexicographic order.
  std::vector<Edge> Edges() const;
  int EdgeCount() const;
  Vector Degrees() const;
  std::vector<std::vector<int>> Neighbors() const;

  Graph WithName(std::string name) const;

  // Structural equality; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  Graph(Matrix adjacency, std::string name)
      : adjacency_(std::move(adjacency)), name_(std::move(name)) {}

  Matrix adjacency_;
  std::string name_;
};

// Bijection on {0..n-1}. Node i is relabeled to mapping[i].
class Permutation {
 public:
  // Throws InvalidArgument unless mapping is a bijection.
  explicit Permutation(std::vector<int> mapping);

  static Permutation Identity(int n);
  static Permutation Random(int n, std::uint64_t seed);

  int size() const { return static_cast<int>(mapping_.size()); }
  int operator[](int i) const { return mapping_[i]; }
  const std::vector<int>& mapping() const { return mapping_; }

  Permutation Inverse() const;
  // (outer ∘ inner)[i] = outer[inner[i]]: relabel by inner first.
  static Permutation Compose(const Permutation& outer,
                             const Permutation& inner);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> mapping_;
};

// Result B satisfies B[p(i), p(j)] = A[i, j]. Throws LengthMismatch.
Graph ApplyPermutation(const Graph& g, const Permutation& p);

// Row p(i) of the result is row i of x. Throws LengthMismatch.
FeatureMatrix PermuteRows(const FeatureMatrix& x, const Permutation& p);

inline constexpr int kBruteForceMaxNodes = 10;

// Exhaustive isomorphism test by backtracking over all vertex bijections.
// Throws SizeMismatch when sizes differ and TooLarge above 10 nodes.
bool IsIsomorphicBruteForce(const Graph& g1, const Graph& g2);

// G(n, p) with a platform-independent seeded generator.
Graph RandomGraph(int n, double edge_probability, std::uint64_t seed,
                  std::string name = {});

}  // namespace spectrawl

#endif  // SPECTRAWL_GRAPH_HPP_
