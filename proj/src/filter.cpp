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

#include "spectrawl/filter.hpp"

#include <cmath>

#include "spectrawl/error.hpp"

namespace spectrawl {

FilterParams::FilterParams(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "filter needs at least one tap");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::kInvalidArgument, "filter taps must be finite");
    }
  }
}

double FrequencyResponse(const FilterParams& h, double lambda) {
  double acc = 0.0;
  for (int k = h.length() - 1; k >= 0; --k) acc = acc * lambda + h[k];
  return acc;
}

FilterParams ExamplePairFilter() {
  return FilterParams{10.0, 1.0, -1.0 / 2, 1.0 / 3, -1.0 / 4, 1.0 / 5};
}

FilterParams CslFilter() {
  std::vector<double> h(10, 0.0);
  for (int k = 1; k < 10; ++k) h[k] = (k % 2 == 1 ? 1.0 : -1.0) / k;
  return FilterParams(std::move(h));
}

}  // namespace spectrawl
