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


#include "spectrawl/anonymous.hpp"

#include <string>

#include "spectrawl/error.hpp"

namespace spectrawl {

namespace {

FeatureMatrix RunDiagonal(const Graph& g, const DiagonalLayer& layer) {
  if (layer.filters.empty()) {
    throw Error(ErrorCode::kConfigError, "diagonal layer has no filters");
  }
  FeatureMatrix out(g.size(), static_cast<Eigen::Index>(layer.filters.size()));
  for (std::size_t f = 0; f < layer.filters.size(); ++f) {
    out.col(static_cast<Eigen::Index>(f)) =
        DiagonalModule(g, layer.filters[f], layer.sigma);
  }
  return out;
}

FeatureMatrix RunStandard(const Graph& g, const FeatureMatrix& x,
                          const StandardLayer& layer, std::size_t index) {
  const std::string where = "layer " + std::to_string(index);
  if (layer.taps.empty()) {
    throw Error(ErrorCode::kConfigError, where + " has no taps");
  }
  for (const Matrix& tap : layer.taps) {
    if (tap.rows() != x.cols() || tap.cols() != layer.taps.front().cols()) {
      throw Error(ErrorCode::kConfigError,
                  where + ": tap shape does not match its input width " +
                      std::to_string(x.cols()));
    }
  }
  return GnnLayer(g, x, layer.taps, layer.sigma);
}

}  // namespace

FeatureMatrix AnonymousEmbed(const Graph& g,
                             const std::vector<AnonymousLayer>& layers) {
  if (layers.empty()) {
    throw Error(ErrorCode::kConfigError, "network has no layers");
  }
  FeatureMatrix x;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (const auto* diag = std::get_if<DiagonalLayer>(&layers[i])) {
      if (i != 0) {
        throw Error(ErrorCode::kConfigError,
                    "a diagonal layer may only come first");
      }
      x = RunDiagonal(g, *diag);
      continue;
    }
    const auto& standard = std::get<StandardLayer>(layers[i]);
    if (i == 0) {
      if (!standard.input_depth || *standard.input_depth < 1) {
        throw Error(ErrorCode::kConfigError,
                    "a first standard layer needs input_depth >= 1");
      }
      x = DiagPowers(g, *standard.input_depth);
    } else if (standard.input_depth) {
      throw Error(ErrorCode::kConfigError,
                  "input_depth is only valid on the first layer");
    }
    x = RunStandard(g, x, standard, i);
  }
  return x;
}

std::vector<FilterParams> SelectorFilters(int count) {
  if (count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one selector");
  }
  std::vector<FilterParams> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    std::vector<double> h(static_cast<std::size_t>(k) + 1, 0.0);
    h.back() = 1.0;
    out.emplace_back(std::move(h));
  }
  return out;
}

}  // namespace spectrawl
