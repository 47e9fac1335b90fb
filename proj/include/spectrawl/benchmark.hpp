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


#ifndef SPECTRAWL_BENCHMARK_HPP_
#define SPECTRAWL_BENCHMARK_HPP_

#include <string>
#include <vector>

#include "spectrawl/discriminate.hpp"
#include "spectrawl/graph.hpp"

namespace spectrawl {

struct GraphPair {
  Graph first;
  Graph second;
};

struct BenchmarkRow {
  std::string pair;  // "name1|name2"
  // Empty on success; the error text when the pair failed.
  std::string error;
  DiscriminationReport report;
  double millis = 0.0;
};

struct BenchmarkSummary {
  int pairs = 0;
  int errors = 0;
  int wl_distinguished = 0;
  int spectral_separable = 0;
  int diag_separable = 0;
  int overall_separable = 0;
  std::vector<BenchmarkRow> rows;  // sorted by pair name

  // Header pair,wl,spectral,diag,overall,millis; failed pairs print "error"
  // in every verdict column.
  std::string ToCsv() const;
};

// Runs DiscriminatePair on every pair. A failing pair is recorded as an error
// row and does not abort the run. `threads` = 0 picks the hardware count;
// the summary does not depend on it apart from timings.
BenchmarkSummary RunBenchmark(const std::vector<GraphPair>& pairs,
                              const DiscriminationConfig& config = {},
                              unsigned threads = 1);

}  // namespace spectrawl

#endif  // SPECTRAWL_BENCHMARK_HPP_
