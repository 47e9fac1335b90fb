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

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "spectrawl/error.hpp"

namespace spectrawl {

int WlColoring::NumClasses(int round) const {
  const auto& c = colors.at(round);
  return static_cast<int>(std::set<int>(c.begin(), c.end()).size());
}

namespace {

using Key = std::pair<int, std::vector<int>>;

// Maps keys to dense ids in sorted key order. Keys are compared exactly, so
// two nodes share a color iff their keys are identical.
template <typename K>
std::vector<std::vector<int>> Relabel(const std::vector<std::vector<K>>& keys,
                                      int* num_classes) {
  std::map<K, int> dictionary;
  for (const auto& per_graph : keys) {
    for (const auto& k : per_graph) dictionary.emplace(k, 0);
  }
  int next = 0;
  for (auto& [k, id] : dictionary) id = next++;
  *num_classes = next;
  std::vector<std::vector<int>> out(keys.size());
  for (std::size_t g = 0; g < keys.size(); ++g) {
    out[g].reserve(keys[g].size());
    for (const auto& k : keys[g]) out[g].push_back(dictionary.at(k));
  }
  return out;
}

std::vector<int> Histogram(const std::vector<int>& colors, int num_classes) {
  std::vector<int> h(num_classes, 0);
  for (int c : colors) ++h[c];
  return h;
}

}  // namespace

std::vector<WlColoring> WlRefineJointly(const std::vector<const Graph*>& graphs,
                                        WlInit init) {
  const std::size_t count = graphs.size();
  std::vector<std::vector<std::vector<int>>> neighbors(count);
  int total_nodes = 0;
  for (std::size_t g = 0; g < count; ++g) {
    neighbors[g] = graphs[g]->Neighbors();
    total_nodes += graphs[g]->size();
  }

  int classes = 0;
  std::vector<std::vector<int>> current;
  if (init == WlInit::kDegree) {
    std::vector<std::vector<int>> degree_keys(count);
    for (std::size_t g = 0; g < count; ++g) {
      for (const auto& adj : neighbors[g]) {
        degree_keys[g].push_back(static_cast<int>(adj.size()));
      }
    }
    current = Relabel(degree_keys, &classes);
  } else {
    for (std::size_t g = 0; g < count; ++g) {
      current.emplace_back(graphs[g]->size(), 0);
    }
    classes = total_nodes > 0 ? 1 : 0;
  }

  std::vector<WlColoring> out(count);
  for (std::size_t g = 0; g < count; ++g) out[g].colors.push_back(current[g]);

  // Classes only split, so a stable class count means a stable partition; at
  // most total_nodes rounds can split anything.
  for (int round = 1; round <= std::max(1, total_nodes); ++round) {
    std::vector<std::vector<Key>> keys(count);
    for (std::size_t g = 0; g < count; ++g) {
      keys[g].reserve(current[g].size());
      for (std::size_t v = 0; v < current[g].size(); ++v) {
        std::vector<int> multiset;
        multiset.reserve(neighbors[g][v].size());
        for (int u : neighbors[g][v]) multiset.push_back(current[g][u]);
        std::sort(multiset.begin(), multiset.end());
        keys[g].emplace_back(current[g][v], std::move(multiset));
      }
    }
    int next_classes = 0;
    current = Relabel(keys, &next_classes);
    for (std::size_t g = 0; g < count; ++g) out[g].colors.push_back(current[g]);
    if (next_classes == classes) {
      for (auto& c : out) c.stable_at = round;
      break;
    }
    classes = next_classes;
  }
  for (auto& c : out) {
    c.signature = c.colors.back();
    std::sort(c.signature.begin(), c.signature.end());
  }
  return out;
}

WlColoring WlRefine(const Graph& g, WlInit init) {
  return std::move(WlRefineJointly({&g}, init).front());
}

std::string_view WlVerdictName(WlVerdict v) {
  return v == WlVerdict::kDistinguished ? "distinguished" : "indistinguishable";
}

WlVerdict WlDistinguish(const Graph& g1, const Graph& g2) {
  if (g1.size() != g2.size()) return WlVerdict::kDistinguished;
  const auto joint = WlRefineJointly({&g1, &g2}, WlInit::kUniform);
  const auto& a = joint[0];
  const auto& b = joint[1];
  for (std::size_t t = 0; t < a.colors.size(); ++t) {
    const int k = 1 + std::max(*std::max_element(a.colors[t].begin(), a.colors[t].end()),
                               *std::max_element(b.colors[t].begin(), b.colors[t].end()));
    if (Histogram(a.colors[t], k) != Histogram(b.colors[t], k)) {
      return WlVerdict::kDistinguished;
    }
  }
  return WlVerdict::kIndistinguishable;
}

FeatureMatrix WlFeatureMatrix(const Graph& g, int depth) {
  if (depth < 1) {
    throw Error(ErrorCode::kInvalidArgument, "depth must be at least 1");
  }
  FeatureMatrix x(g.size(), depth);
  Vector v = Vector::Ones(g.size());
  for (int k = 0; k < depth; ++k) {
    v = g.adjacency() * v;
    x.col(k) = v;
  }
  return x;
}

}  // namespace spectrawl
