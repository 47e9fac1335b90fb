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

#include "spectrawl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "spectrawl/eigen_solver.hpp"
#include "spectrawl/error.hpp"
#include "spectrawl/rows.hpp"

namespace spectrawl {

double Spectrum::SpectralRadius() const {
  return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
}

const EigenGroup* Spectrum::FindGroup(double lambda, double tol) const {
  const EigenGroup* best = nullptr;
  double best_gap = tol;
  for (const auto& group : groups) {
    const double gap = std::abs(group.value - lambda);
    if (gap <= best_gap) {
      best = &group;
      best_gap = gap;
    }
  }
  return best;
}

std::vector<EigenGroup> GroupEigenvalues(const Vector& ascending, double tol) {
  std::vector<EigenGroup> groups;
  for (int i = 0; i < ascending.size(); ++i) {
    if (groups.empty() || ascending[i] - ascending[i - 1] > tol) {
      groups.push_back({});
    }
    groups.back().indices.push_back(i);
  }
  for (auto& group : groups) {
    double sum = 0.0;
    for (int i : group.indices) sum += ascending[i];
    group.value = sum / group.multiplicity();
  }
  return groups;
}

Spectrum Eigendecompose(const Graph& g, const SpectralOptions& options) {
  SymmetricEigenResult eig = SymmetricEigen(g.adjacency(), options.max_iterations);
  Spectrum s;
  s.eigenvalues = std::move(eig.values);
  s.eigenvectors = std::move(eig.vectors);
  s.group_tolerance = options.group_tolerance.value_or(
      kDefaultSpectralTolerance * std::max(1.0, s.SpectralRadius()));
  s.groups = GroupEigenvalues(s.eigenvalues, s.group_tolerance);
  return s;
}

Vector EigenvectorOneProducts(const Spectrum& s) {
  return s.eigenvectors.colwise().sum().transpose().cwiseAbs();
}

std::optional<SpectralWitness> SpectraDiffer(const Spectrum& s1,
                                             const Spectrum& s2, double tol) {
  std::vector<double> values;
  for (const auto& g : s1.groups) values.push_back(g.value);
  for (const auto& g : s2.groups) values.push_back(g.value);
  std::sort(values.begin(), values.end(), std::greater<>());
  for (double v : values) {
    const EigenGroup* a = s1.FindGroup(v, tol);
    const EigenGroup* b = s2.FindGroup(v, tol);
    const int m1 = a ? a->multiplicity() : 0;
    const int m2 = b ? b->multiplicity() : 0;
    if (m1 != m2) return SpectralWitness{v, m1, m2};
  }
  return std::nullopt;
}

std::optional<SpectralWitness> SpectraDiffer(const Graph& g1, const Graph& g2,
                                             double tol) {
  return SpectraDiffer(Eigendecompose(g1), Eigendecompose(g2), tol);
}

namespace {

Matrix GroupBasis(const Spectrum& s, const EigenGroup& group) {
  Matrix basis(s.size(), group.multiplicity());
  for (int j = 0; j < group.multiplicity(); ++j) {
    basis.col(j) = s.eigenvectors.col(group.indices[j]);
  }
  return basis;
}

// Columns of `basis * W` orthogonal to the subspace shared with `other`,
// where W diagonalizes the Gram product of the two bases. Singular values of
// basis^T other equal to one mark shared directions.
Matrix NonSharedPart(const Matrix& basis, const Matrix& other, double tol) {
  const Matrix cross = basis.transpose() * other;
  const SymmetricEigenResult eig = SymmetricEigen(cross * cross.transpose());
  std::vector<int> keep;
  for (int i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] <= 1.0 - tol) keep.push_back(i);
  }
  Matrix out(basis.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) = basis * eig.vectors.col(keep[j]);
  }
  return out;
}

std::optional<DifferingEigenvalueWitness> FindExclusiveEigenvalue(
    const Spectrum& own, const Spectrum& other, const FeatureMatrix& x,
    int graph_id, double tol) {
  for (auto it = own.groups.rbegin(); it != own.groups.rend(); ++it) {
    if (other.FindGroup(it->value, tol) != nullptr) continue;
    const double norm = (x.transpose() * GroupBasis(own, *it)).norm();
    if (norm > tol) return DifferingEigenvalueWitness{it->value, graph_id, norm};
  }
  return std::nullopt;
}

}  // namespace

Eigenspace EigenspaceOf(const Spectrum& s, double lambda, double tol) {
  const EigenGroup* group = s.FindGroup(lambda, tol);
  if (group == nullptr) {
    throw Error(ErrorCode::kNoSuchEigenvalue, std::to_string(lambda));
  }
  return {group->value, GroupBasis(s, *group)};
}

std::string_view SeparabilityName(Separability v) {
  return v == Separability::kSeparable ? "separable" : "inconclusive";
}

ConditionReport CheckSeparationConditions(const Graph& g1, const Graph& g2,
                                          const FeatureMatrix& x1,
                                          const FeatureMatrix& x2, double tol) {
  if (x1.rows() != g1.size() || x2.rows() != g2.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature rows must equal node counts");
  }
  if (x1.cols() != x2.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "feature widths differ");
  }
  ConditionReport report;
  report.cond1_signals_differ = !SameRowMultiset(x1, x2, tol);

  const Spectrum s1 = Eigendecompose(g1);
  const Spectrum s2 = Eigendecompose(g2);

  report.cond2_witness = FindExclusiveEigenvalue(s1, s2, x1, 1, tol);
  if (!report.cond2_witness) {
    report.cond2_witness = FindExclusiveEigenvalue(s2, s1, x2, 2, tol);
  }

  // Eigenspaces of graphs on different node counts live in different spaces.
  if (g1.size() == g2.size()) {
    for (auto it = s1.groups.rbegin(); it != s1.groups.rend(); ++it) {
      const EigenGroup* other = s2.FindGroup(it->value, tol);
      if (other == nullptr || other->multiplicity() == it->multiplicity()) {
        continue;
      }
      const Matrix v1 = GroupBasis(s1, *it);
      const Matrix v2 = GroupBasis(s2, *other);
      const Matrix q1 = NonSharedPart(v1, v2, tol);
      const Matrix q2 = NonSharedPart(v2, v1, tol);
      const double norm1 = q1.cols() ? (x1.transpose() * q1).norm() : 0.0;
      const double norm2 = q2.cols() ? (x2.transpose() * q2).norm() : 0.0;
      if (norm1 > tol || norm2 > tol) {
        report.cond3_witness = MultiplicityWitness{
            it->value, it->multiplicity(), other->multiplicity(), norm1, norm2};
        break;
      }
    }
  }

  const bool any = report.cond1_signals_differ ||
                   report.cond2_witness.has_value() ||
                   report.cond3_witness.has_value();
  report.verdict = any ? Separability::kSeparable : Separability::kInconclusive;
  return report;
}

FilterParams IsolatingFilter(std::span<const double> mus, int target,
                             double min_separation) {
  const int q = static_cast<int>(mus.size());
  if (q == 0) {
    throw Error(ErrorCode::kInvalidArgument, "no interpolation nodes");
  }
  if (target < 0 || target >= q) {
    throw Error(ErrorCode::kIndexOutOfRange, "target node index");
  }
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (std::abs(mus[i] - mus[j]) <= min_separation) {
        throw Error(ErrorCode::kDegenerateNodes,
                    std::to_string(mus[i]) + " and " + std::to_string(mus[j]));
      }
    }
  }
  // prod_{i != target} (s - mu_i) / (mu_target - mu_i), expanded.
  std::vector<double> poly{1.0};
  double denom = 1.0;
  for (int i = 0; i < q; ++i) {
    if (i == target) continue;
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= mus[i] * poly[k];
    }
    poly = std::move(next);
    denom *= mus[target] - mus[i];
  }
  for (double& c : poly) c /= denom;
  return FilterParams(std::move(poly));
}

FilterParams IsolatingFilterForGroup(const Spectrum& s, int group_index) {
  std::vector<double> mus;
  mus.reserve(s.groups.size());
  for (const auto& g : s.groups) mus.push_back(g.value);
  return IsolatingFilter(mus, group_index, 0.0);
}

Matrix FilterMatrix(const Graph& g, const FilterParams& h) {
  const int n = g.size();
  const Matrix& s = g.adjacency();
  Matrix acc = h[h.length() - 1] * Matrix::Identity(n, n);
  for (int k = h.length() - 2; k >= 0; --k) {
    acc = acc * s;
    acc.diagonal().array() += h[k];
  }
  return acc;
}

std::string_view AbsEigvecVerdictName(AbsEigvecVerdict v) {
  switch (v) {
    case AbsEigvecVerdict::kSeparable: return "separable";
    case AbsEigvecVerdict::kInconclusive: return "inconclusive";
    case AbsEigvecVerdict::kNotApplicable: return "not_applicable";
  }
  return "unknown";
}

AbsEigvecVerdict AbsoluteEigenvectorTest(const Graph& g1, const Graph& g2,
                                         double tol) {
  if (g1.size() != g2.size()) return AbsEigvecVerdict::kNotApplicable;
  const Spectrum s1 = Eigendecompose(g1);
  const Spectrum s2 = Eigendecompose(g2);
  if (SpectraDiffer(s1, s2, tol)) return AbsEigvecVerdict::kNotApplicable;
  const auto simple = [](const Spectrum& s) {
    return std::all_of(s.groups.begin(), s.groups.end(),
                       [](const EigenGroup& g) { return g.multiplicity() == 1; });
  };
  if (!simple(s1) || !simple(s2)) return AbsEigvecVerdict::kNotApplicable;
  // Columns share the ascending eigenvalue order, so only rows may permute.
  return SameRowMultiset(s1.eigenvectors.cwiseAbs(), s2.eigenvectors.cwiseAbs(),
                         tol)
             ? AbsEigvecVerdict::kInconclusive
             : AbsEigvecVerdict::kSeparable;
}

}  // namespace spectrawl
