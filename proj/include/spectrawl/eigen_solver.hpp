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

#ifndef SPECTRAWL_EIGEN_SOLVER_HPP_
#define SPECTRAWL_EIGEN_SOLVER_HPP_

#include "spectrawl/graph.hpp"

namespace spectrawl {

struct SymmetricEigenResult {
  Vector values;   // ascending
  Matrix vectors;  // column i pairs with values[i]
};

/// Dense symmetric eigendecomposition: Householder reduction to tridiagonal
/// form followed by the implicit-shift QL iteration (the EISPACK tred2/tql2
/// pair). Eigenvector signs are fixed so the largest-magnitude component of
/// each column is positive, which makes the output deterministic.
///
/// Only the lower triangle of `a` is trusted to be consistent; callers pass
/// symmetric matrices. Throws ConvergenceFailure when an eigenvalue needs more
/// than `max_iterations` QL sweeps.
SymmetricEigenResult SymmetricEigen(const Matrix& a, int max_iterations = 64);

}  // namespace spectrawl

#endif  // SPECTRAWL_EIGEN_SOLVER_HPP_
