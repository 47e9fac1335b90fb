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

#ifndef SPECTRAWL_CSL_HPP_
#define SPECTRAWL_CSL_HPP_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "spectrawl/graph.hpp"

namespace spectrawl {

// Circular Skip Link benchmark: one class per skip length R, each class a
// set of randomly relabeled copies of the circulant with edges {i, i+1} and
// {i, i+R} (mod n).
struct CslSpec {
  int n = 41;
  std::vector<int> skips{2, 3, 4, 5, 6, 9, 11, 12, 13, 16};
  int copies_per_class = 15;
  std::uint64_t seed = 0;

  // Throws InvalidSkip unless every skip satisfies 1 < R < n/2 and skips are
  // distinct; InvalidArgument for non-positive copy counts.
  void Validate() const;
};

// Base circulant for one skip length; 4-regular when 1 < R < n/2.
Graph CslBaseGraph(int n, int skip);

struct CslSample {
  Graph graph;
  int label = 0;  // index into CslSpec::skips
};

struct CslDataset {
  CslSpec spec;
  std::vector<CslSample> samples;
};

// Copy c of class k is the base graph relabeled by a permutation seeded from
// (spec.seed, k, c).
CslDataset CslGenerate(const CslSpec& spec);

// 1^T y / 1000 for the linear diagonal module with the CSL filter.
double CslScore(const Graph& g);

struct CslClassification {
  double accuracy = 0.0;
  std::vector<double> scores;     // per sample
  std::vector<int> predicted;     // per sample
  std::vector<double> centroids;  // per class, from the base circulants
};

// Nearest-centroid assignment against the base-circulant class scores.
CslClassification CslClassify(const CslDataset& dataset);

// Writes one edge-list file per sample plus labels.csv (file,label,skip)
// and spec.json. Throws IoError.
void CslWrite(const CslDataset& dataset, const std::filesystem::path& dir);
CslDataset CslLoad(const std::filesystem::path& dir);

}  // namespace spectrawl

#endif  // SPECTRAWL_CSL_HPP_
