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


#ifndef SPECTRAWL_ANONYMOUS_HPP_
#define SPECTRAWL_ANONYMOUS_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "spectrawl/filter.hpp"
#include "spectrawl/gnn.hpp"
#include "spectrawl/graph.hpp"

namespace spectrawl {

// Column f holds sigma(diag(H_f(S))). Only valid as the first layer.
struct DiagonalLayer {
  std::vector<FilterParams> filters;
  Nonlinearity sigma = Nonlinearity::Linear();
};

// Y = sigma(sum_k S^k X H_k). A first standard layer reads the diag-power
// features DiagPowers(g, input_depth); later layers read the previous output
// and must leave input_depth unset.
struct StandardLayer {
  std::vector<Matrix> taps;
  Nonlinearity sigma = Nonlinearity::Linear();
  std::optional<int> input_depth;
};

using AnonymousLayer = std::variant<DiagonalLayer, StandardLayer>;

// Forward pass of an anonymous-input network with fixed parameters. Throws
// ConfigError for an empty stack, a misplaced diagonal layer, a missing or
// misplaced input_depth, or tap shapes that do not chain.
FeatureMatrix AnonymousEmbed(const Graph& g,
                             const std::vector<AnonymousLayer>& layers);

// K filters where filter k is the unit vector e_k, so a diagonal layer built
// from them reproduces DiagPowers(g, K).
std::vector<FilterParams> SelectorFilters(int count);

}  // namespace spectrawl

#endif  // SPECTRAWL_ANONYMOUS_HPP_
