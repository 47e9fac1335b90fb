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

#include "spectrawl/rows.hpp"

#include <algorithm>
#include <cmath>

#include "spectrawl/error.hpp"

namespace spectrawl {

int DigitsForTolerance(double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  const int digits = static_cast<int>(std::ceil(-std::log10(tol) - 1e-12));
  return std::clamp(digits, 0, 15);
}

std::vector<std::vector<std::int64_t>> CanonicalRows(const FeatureMatrix& x,
                                                     double tol) {
  const double scale = std::pow(10.0, DigitsForTolerance(tol));
  std::vector<std::vector<std::int64_t>> rows(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    rows[i].reserve(x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      rows[i].push_back(std::llround(x(i, j) * scale));
    }
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

bool SameRowMultiset(const FeatureMatrix& x, const FeatureMatrix& y,
                     double tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  return CanonicalRows(x, tol) == CanonicalRows(y, tol);
}

}  // namespace spectrawl
