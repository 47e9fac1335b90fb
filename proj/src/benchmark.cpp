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


#include "spectrawl/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace spectrawl {

namespace {

BenchmarkRow RunOne(const GraphPair& p, const DiscriminationConfig& config) {
  BenchmarkRow row;
  row.pair = p.first.name() + "|" + p.second.name();
  const auto start = std::chrono::steady_clock::now();
  try {
    row.report = DiscriminatePair(p.first, p.second, config);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return row;
}

}  // namespace

std::string BenchmarkSummary::ToCsv() const {
  std::ostringstream out;
  out << "pair,wl,spectral,diag,overall,millis\n";
  for (const auto& row : rows) {
    out << row.pair << ',';
    if (row.error.empty()) {
      out << WlVerdictName(row.report.wl) << ','
          << SeparabilityName(row.report.spectral) << ','
          << SeparabilityName(row.report.diag_gnn) << ','
          << SeparabilityName(row.report.overall);
    } else {
      out << "error,error,error,error";
    }
    out << ',' << row.millis << '\n';
  }
  return out.str();
}

BenchmarkSummary RunBenchmark(const std::vector<GraphPair>& pairs,
                              const DiscriminationConfig& config,
                              unsigned threads) {
  BenchmarkSummary summary;
  summary.rows.resize(pairs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(pairs.size(), 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      summary.rows[i] = RunOne(pairs[i], config);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::stable_sort(summary.rows.begin(), summary.rows.end(),
                   [](const BenchmarkRow& a, const BenchmarkRow& b) {
                     return a.pair < b.pair;
                   });
  summary.pairs = static_cast<int>(summary.rows.size());
  for (const auto& row : summary.rows) {
    if (!row.error.empty()) {
      ++summary.errors;
      continue;
    }
    summary.wl_distinguished += row.report.wl == WlVerdict::kDistinguished;
    summary.spectral_separable +=
        row.report.spectral == Separability::kSeparable;
    summary.diag_separable += row.report.diag_gnn == Separability::kSeparable;
    summary.overall_separable +=
        row.report.overall == Separability::kSeparable;
  }
  return summary;
}

}  // namespace spectrawl
