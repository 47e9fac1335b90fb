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

#ifndef SPECTRAWL_FILTER_HPP_
#define SPECTRAWL_FILTER_HPP_

#include <initializer_list>
#include <vector>

namespace spectrawl {

// Coefficients h_0..h_{K-1} of the polynomial graph filter sum_k h_k S^k.
// K >= 1 and all coefficients finite.
class FilterParams {
 public:
  explicit FilterParams(std::vector<double> coeffs);
  FilterParams(std::initializer_list<double> coeffs)
      : FilterParams(std::vector<double>(coeffs)) {}

  int length() const { return static_cast<int>(coeffs_.size()); }
  double operator[](int k) const { return coeffs_[k]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  friend bool operator==(const FilterParams&, const FilterParams&) = default;

 private:
  std::vector<double> coeffs_;
};

// Frequency response sum_k h_k lambda^k, evaluated by Horner's rule.
double FrequencyResponse(const FilterParams& h, double lambda);

// (10, 1, -1/2, 1/3, -1/4, 1/5): the fixed diagonal-module filter used for
// the WL-indistinguishable example pairs.
FilterParams ExamplePairFilter();

// (0, 1, -1/2, 1/3, ..., 1/9): the fixed filter that separates CSL classes.
FilterParams CslFilter();

}  // namespace spectrawl

#endif  // SPECTRAWL_FILTER_HPP_
