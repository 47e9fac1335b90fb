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

#ifndef SPECTRAWL_ROWS_HPP_
#define SPECTRAWL_ROWS_HPP_

#include <cstdint>
#include <vector>

#include "spectrawl/graph.hpp"

namespace spectrawl {

// Number of decimal digits kept when quantizing at tolerance `tol`:
// ceil(-log10(tol)), clamped to [0, 15].
int DigitsForTolerance(double tol);

// Rows of x rounded to DigitsForTolerance(tol) decimals, as scaled integers,
// sorted lexicographically. Two matrices hold the same row multiset (up to a
// row permutation) at `tol` iff their canonical forms are equal.
std::vector<std::vector<std::int64_t>> CanonicalRows(const FeatureMatrix& x,
                                                     double tol);

// True iff x and y have equal shapes and equal canonical row multisets.
bool SameRowMultiset(const FeatureMatrix& x, const FeatureMatrix& y,
                     double tol);

}  // namespace spectrawl

#endif  // SPECTRAWL_ROWS_HPP_
