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


#ifndef SPECTRAWL_REPRODUCE_HPP_
#define SPECTRAWL_REPRODUCE_HPP_

#include <string>
#include <vector>

namespace spectrawl {

struct TableEntry {
  std::string label;
  double got = 0.0;
  double want = 0.0;
  double tolerance = 0.0;

  bool ok() const;
};

struct TableReport {
  int table = 0;
  std::vector<TableEntry> entries;

  bool match() const;
};

// Recomputes a reference table (1, 2, 4 or 5) and pairs every value with its
// golden counterpart. Tolerances are half a unit in the last printed digit
// (Tables 1 and 2) or 1e-3 / 5e-3 for eigenvalues / eigenvector sums
// (Tables 4 and 5). Throws InvalidArgument for other table numbers.
TableReport ReproduceTable(int table);

}  // namespace spectrawl

#endif  // SPECTRAWL_REPRODUCE_HPP_
