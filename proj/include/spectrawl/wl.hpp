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

#ifndef SPECTRAWL_WL_HPP_
#define SPECTRAWL_WL_HPP_

#include <string_view>
#include <vector>

#include "spectrawl/graph.hpp"

namespace spectrawl {

enum class WlInit { kUniform, kDegree };

// Color history of 1-WL refinement. colors[t] is the coloring after t rounds;
// colors[0] is the initial coloring. Colors are dense ids assigned in sorted
// order of their (previous color, neighbor color multiset) keys, so they do not
// depend on node order.
struct WlColoring {
  std::vector<std::vector<int>> colors;
  // First round whose partition equals the previous one.
  int stable_at = 0;
  // Sorted final colors.
  std::vector<int> signature;

  const std::vector<int>& final_colors() const { return colors.back(); }
  int NumClasses(int round) const;
};

WlColoring WlRefine(const Graph& g, WlInit init = WlInit::kUniform);

// Refines several graphs with one shared relabeling dictionary so that color
// ids are comparable across them.
std::vector<WlColoring> WlRefineJointly(const std::vector<const Graph*>& graphs,
                                        WlInit init = WlInit::kUniform);

enum class WlVerdict { kDistinguished, kIndistinguishable };
std::string_view WlVerdictName(WlVerdict v);

WlVerdict WlDistinguish(const Graph& g1, const Graph& g2);

// Columns S 1, S^2 1, ..., S^depth 1. Throws InvalidArgument for depth < 1.
FeatureMatrix WlFeatureMatrix(const Graph& g, int depth);

}  // namespace spectrawl

#endif  // SPECTRAWL_WL_HPP_
