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

#ifndef SPECTRAWL_DISCRIMINATE_HPP_
#define SPECTRAWL_DISCRIMINATE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spectrawl/filter.hpp"
#include "spectrawl/gnn.hpp"
#include "spectrawl/graph.hpp"
#include "spectrawl/spectral.hpp"
#include "spectrawl/wl.hpp"

namespace spectrawl {

inline constexpr double kDefaultEmbeddingTolerance = 1e-6;

// True iff some row permutation maps y1 onto y2 after rounding every entry to
// ceil(-log10(tol)) decimals. Column counts must match.
bool EmbeddingsIsomorphic(const FeatureMatrix& y1, const FeatureMatrix& y2,
                          double tol = kDefaultEmbeddingTolerance);

struct DiscriminationConfig {
  FilterParams filter = ExamplePairFilter();
  Nonlinearity sigma = Nonlinearity::Relu();
  double embed_tol = kDefaultEmbeddingTolerance;
  double spectral_tol = kDefaultSpectralTolerance;
  // When set, the input/spectrum separation conditions are also checked on
  // diag-power features of this depth.
  std::optional<int> condition_depth;
};

struct DiscriminationReport {
  std::string name1;
  std::string name2;
  WlVerdict wl = WlVerdict::kIndistinguishable;
  Separability spectral = Separability::kInconclusive;
  std::optional<double> spectral_witness;
  Separability diag_gnn = Separability::kInconclusive;
  // Sorted diagonal-module outputs of each graph.
  std::vector<double> outputs1;
  std::vector<double> outputs2;
  std::optional<ConditionReport> conditions;
  Separability overall = Separability::kInconclusive;

  friend bool operator==(const DiscriminationReport&,
                         const DiscriminationReport&) = default;
};

// Runs joint WL refinement, the grouped-spectrum comparison and the diagonal
// module on both graphs. `overall` is separable iff any method separates.
DiscriminationReport DiscriminatePair(const Graph& g1, const Graph& g2,
                                      const DiscriminationConfig& config = {});

// {"pair":[s,s], "wl":s, "spectral":{"verdict":s,"witness":f|null},
//  "diag_gnn":{"verdict":s,"outputs":[[f..],[f..]]}, "conditions":{..}?,
//  "overall":s}
nlohmann::json ReportToJson(const DiscriminationReport& report);
// Throws ParseError on schema violations.
DiscriminationReport ReportFromJson(const nlohmann::json& j);

}  // namespace spectrawl

#endif  // SPECTRAWL_DISCRIMINATE_HPP_
