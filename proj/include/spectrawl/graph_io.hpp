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

#ifndef SPECTRAWL_GRAPH_IO_HPP_
#define SPECTRAWL_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "spectrawl/graph.hpp"

namespace spectrawl {

// Edge-list text format:
//
//   # optional comment lines
//   N
//   u v        (one edge per line, 0 <= u < v < N, LF endings)
//
// Self-loops, duplicates and malformed lines raise ParseError carrying the
// 1-based line number.
Graph ParseEdgeList(std::string_view text, std::string name = {});
std::string FormatEdgeList(const Graph& g);

// Throws IoError when the file cannot be read or written.
Graph LoadGraph(const std::filesystem::path& path);
void SaveGraph(const Graph& g, const std::filesystem::path& path);

}  // namespace spectrawl

#endif  // SPECTRAWL_GRAPH_IO_HPP_
