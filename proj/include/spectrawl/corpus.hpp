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

#ifndef SPECTRAWL_CORPUS_HPP_
#define SPECTRAWL_CORPUS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectrawl/graph.hpp"

namespace spectrawl {

struct GraphCorpusEntry {
  std::string key;
  Graph graph;
  std::string provenance;
};

// The built-in WL-indistinguishable example pairs:
//   prism / k33            (6 nodes, 3-regular)
//   bihexagon / bipentagon (10 nodes, 11 edges)
// Figure letters A..J map to node indices 0..9.
const std::vector<GraphCorpusEntry>& Corpus();

std::optional<Graph> CorpusGraph(std::string_view key);

}  // namespace spectrawl

#endif  // SPECTRAWL_CORPUS_HPP_
