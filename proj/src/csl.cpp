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

#include "spectrawl/csl.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "spectrawl/error.hpp"
#include "spectrawl/filter.hpp"
#include "spectrawl/gnn.hpp"
#include "spectrawl/graph_io.hpp"
#include "spectrawl/random.hpp"

namespace spectrawl {

void CslSpec::Validate() const {
  if (n < 5) {
    throw Error(ErrorCode::kInvalidArgument, "CSL needs n >= 5");
  }
  if (copies_per_class < 1 || skips.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "CSL needs at least one class and one copy per class");
  }
  std::set<int> seen;
  for (int r : skips) {
    if (!(r > 1 && 2 * r < n)) {
      throw Error(ErrorCode::kInvalidSkip,
                  "skip " + std::to_string(r) + " must satisfy 1 < R < n/2");
    }
    if (!seen.insert(r).second) {
      throw Error(ErrorCode::kInvalidSkip,
                  "duplicate skip " + std::to_string(r));
    }
  }
}

Graph CslBaseGraph(int n, int skip) {
  if (!(skip > 1 && 2 * skip < n)) {
    throw Error(ErrorCode::kInvalidSkip,
                "skip " + std::to_string(skip) + " must satisfy 1 < R < n/2");
  }
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    edges.push_back({i, (i + skip) % n});
  }
  return Graph::FromEdgeList(n, edges, "csl:" + std::to_string(skip));
}

CslDataset CslGenerate(const CslSpec& spec) {
  spec.Validate();
  CslDataset out{spec, {}};
  for (int k = 0; k < static_cast<int>(spec.skips.size()); ++k) {
    const Graph base = CslBaseGraph(spec.n, spec.skips[k]);
    for (int c = 0; c < spec.copies_per_class; ++c) {
      const auto p = Permutation::Random(
          spec.n, CounterHash(spec.seed, static_cast<std::uint64_t>(k),
                              static_cast<std::uint64_t>(c)));
      out.samples.push_back(
          {ApplyPermutation(base, p).WithName(
               "csl_R" + std::to_string(spec.skips[k]) + "_" +
               std::to_string(c)),
           k});
    }
  }
  return out;
}

double CslScore(const Graph& g) {
  return DiagonalModule(g, CslFilter(), Nonlinearity::Linear()).sum() / 1e3;
}

CslClassification CslClassify(const CslDataset& dataset) {
  const CslSpec& spec = dataset.spec;
  CslClassification out;
  for (int r : spec.skips) out.centroids.push_back(CslScore(CslBaseGraph(spec.n, r)));
  int correct = 0;
  for (const auto& sample : dataset.samples) {
    const double score = CslScore(sample.graph);
    int best = 0;
    for (int k = 1; k < static_cast<int>(out.centroids.size()); ++k) {
      if (std::abs(score - out.centroids[k]) <
          std::abs(score - out.centroids[best])) {
        best = k;
      }
    }
    out.scores.push_back(score);
    out.predicted.push_back(best);
    if (best == sample.label) ++correct;
  }
  out.accuracy = dataset.samples.empty()
                     ? 0.0
                     : static_cast<double>(correct) / dataset.samples.size();
  return out;
}

void CslWrite(const CslDataset& dataset, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string());

  std::ostringstream labels;
  labels << "file,label,skip\n";
  for (const auto& sample : dataset.samples) {
    const std::string file = sample.graph.name() + ".txt";
    SaveGraph(sample.graph, dir / file);
    labels << file << ',' << sample.label << ','
           << dataset.spec.skips[sample.label] << '\n';
  }
  std::ofstream csv(dir / "labels.csv", std::ios::binary | std::ios::trunc);
  csv << labels.str();
  nlohmann::json spec = {{"n", dataset.spec.n},
                         {"skips", dataset.spec.skips},
                         {"copies_per_class", dataset.spec.copies_per_class},
                         {"seed", dataset.spec.seed}};
  std::ofstream js(dir / "spec.json", std::ios::binary | std::ios::trunc);
  js << spec.dump(2) << '\n';
  if (!csv || !js) throw Error(ErrorCode::kIoError, "cannot write " + dir.string());
}

CslDataset CslLoad(const std::filesystem::path& dir) {
  std::ifstream js(dir / "spec.json");
  if (!js) throw Error(ErrorCode::kIoError, "missing spec.json in " + dir.string());
  CslDataset out;
  try {
    const auto spec = nlohmann::json::parse(js);
    out.spec.n = spec.at("n").get<int>();
    out.spec.skips = spec.at("skips").get<std::vector<int>>();
    out.spec.copies_per_class = spec.at("copies_per_class").get<int>();
    out.spec.seed = spec.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("spec.json: ") + e.what());
  }
  out.spec.Validate();

  std::ifstream csv(dir / "labels.csv");
  if (!csv) throw Error(ErrorCode::kIoError, "missing labels.csv in " + dir.string());
  std::string line;
  int line_no = 1;
  std::getline(csv, line);  // header
  while (std::getline(csv, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw Error(ErrorCode::kParseError, "labels.csv: expected file,label,skip",
                  line_no);
    }
    const std::string file = line.substr(0, c1);
    int label = -1;
    try {
      label = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "labels.csv: bad label", line_no);
    }
    if (label < 0 || label >= static_cast<int>(out.spec.skips.size())) {
      throw Error(ErrorCode::kParseError, "labels.csv: label out of range",
                  line_no);
    }
    out.samples.push_back({LoadGraph(dir / file), label});
  }
  return out;
}

}  // namespace spectrawl
