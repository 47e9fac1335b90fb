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

#include "spectrawl/corpus.hpp"

namespace spectrawl {

namespace {

std::vector<GraphCorpusEntry> BuildCorpus() {
  std::vector<GraphCorpusEntry> out;
  out.push_back({"prism",
                 Graph::FromEdgeList(6,
                                     {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4},
                                      {3, 5}, {4, 5}, {0, 4}, {1, 5}},
                                     "prism"),
                 "triangular prism; 3-regular, WL-equivalent to k33"});

  std::vector<Edge> k33;
  for (int a : {0, 2, 4}) {
    for (int b : {1, 3, 5}) k33.push_back({a, b});
  }
  out.push_back({"k33", Graph::FromEdgeList(6, k33, "k33"),
                 "complete bipartite K3,3 on parts {0,2,4} and {1,3,5}"});

  out.push_back({"bihexagon",
                 Graph::FromEdgeList(10,
                                     {{4, 2}, {2, 0}, {0, 1}, {1, 3}, {3, 5},
                                      {5, 4}, {4, 6}, {6, 8}, {8, 9}, {9, 7},
                                      {7, 5}},
                                     "bihexagon"),
                 "two hexagons sharing edge (4,5)"});

  out.push_back({"bipentagon",
                 Graph::FromEdgeList(10,
                                     {{4, 2}, {2, 0}, {0, 1}, {1, 3}, {3, 4},
                                      {5, 4}, {5, 7}, {7, 9}, {9, 8}, {8, 6},
                                      {6, 5}},
                                     "bipentagon"),
                 "two pentagons joined by edge (4,5)"});
  return out;
}

}  // namespace

const std::vector<GraphCorpusEntry>& Corpus() {
  static const std::vector<GraphCorpusEntry> corpus = BuildCorpus();
  return corpus;
}

std::optional<Graph> CorpusGraph(std::string_view key) {
  for (const auto& entry : Corpus()) {
    if (entry.key == key) return entry.graph;
  }
  return std::nullopt;
}

}  // namespace spectrawl
