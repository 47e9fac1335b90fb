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

#include "spectrawl/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "spectrawl/error.hpp"

namespace spectrawl {

namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int ParseInt(std::string_view token, int line) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kParseError,
                "expected integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

Graph ParseEdgeList(std::string_view text, std::string name) {
  int n = -1;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    const auto tokens = SplitWhitespace(line);
    if (tokens.empty()) continue;

    if (n < 0) {
      if (tokens.size() != 1) {
        throw Error(ErrorCode::kParseError, "expected node count", line_no);
      }
      n = ParseInt(tokens[0], line_no);
      if (n <= 0) {
        throw Error(ErrorCode::kParseError, "node count must be positive",
                    line_no);
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kParseError, "expected 'u v'", line_no);
    }
    const int u = ParseInt(tokens[0], line_no);
    const int v = ParseInt(tokens[1], line_no);
    if (u == v) {
      throw Error(ErrorCode::kParseError,
                  "self-loop at node " + std::to_string(u), line_no);
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kParseError, "node index out of range", line_no);
    }
    if (u > v) {
      throw Error(ErrorCode::kParseError, "edges must be written as u < v",
                  line_no);
    }
    if (!seen.insert({u, v}).second) {
      throw Error(ErrorCode::kParseError,
                  "duplicate edge " + std::to_string(u) + " " +
                      std::to_string(v),
                  line_no);
    }
    edges.push_back({u, v});
  }
  if (n < 0) throw Error(ErrorCode::kParseError, "missing node count", line_no);
  return Graph::FromEdgeList(n, edges, std::move(name));
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  if (!g.name().empty()) out << "# " << g.name() << '\n';
  out << g.size() << '\n';
  for (const Edge& e : g.Edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph LoadGraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return ParseEdgeList(buf.str(), path.stem().string());
}

void SaveGraph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  out << FormatEdgeList(g);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

}  // namespace spectrawl
