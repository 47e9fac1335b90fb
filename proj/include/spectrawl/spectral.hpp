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

#ifndef SPECTRAWL_SPECTRAL_HPP_
#define SPECTRAWL_SPECTRAL_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spectrawl/filter.hpp"
#include "spectrawl/graph.hpp"

namespace spectrawl {

inline constexpr double kDefaultSpectralTolerance = 1e-6;

struct EigenGroup {
  double value = 0.0;        // mean of the grouped eigenvalues
  std::vector<int> indices;  // eigenvector columns, ascending

  int multiplicity() const { return static_cast<int>(indices.size()); }
};

// Eigenvalues ascending, eigenvectors as orthonormal columns, and the
// eigenvalues clustered into groups of (numerically) equal value. Adjacent
// sorted eigenvalues closer than `group_tolerance` share a group.
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;
  std::vector<EigenGroup> groups;
  double group_tolerance = 0.0;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  double SpectralRadius() const;
  // Group whose value is within tol of lambda, if any.
  const EigenGroup* FindGroup(double lambda, double tol) const;
};

struct SpectralOptions {
  // Defaults to 1e-6 * max(1, spectral radius).
  std::optional<double> group_tolerance;
  int max_iterations = 64;
};

Spectrum Eigendecompose(const Graph& g, const SpectralOptions& options = {});

// Clusters an ascending eigenvalue list. Exposed for testing.
std::vector<EigenGroup> GroupEigenvalues(const Vector& ascending, double tol);

// |u_i^T 1| for every eigenvector column i.
Vector EigenvectorOneProducts(const Spectrum& s);

// An eigenvalue present in one grouped spectrum but not the other, or present
// in both with different multiplicities. A multiplicity of 0 marks absence.
struct SpectralWitness {
  double value = 0.0;
  int multiplicity1 = 0;
  int multiplicity2 = 0;

  friend bool operator==(const SpectralWitness&,
                         const SpectralWitness&) = default;
};

// Scans the union of group values in descending order and returns the first
// mismatch, or nullopt when the grouped spectra agree within tol.
std::optional<SpectralWitness> SpectraDiffer(const Spectrum& s1,
                                             const Spectrum& s2, double tol);
std::optional<SpectralWitness> SpectraDiffer(
    const Graph& g1, const Graph& g2, double tol = kDefaultSpectralTolerance);

struct Eigenspace {
  double value = 0.0;
  Matrix basis;  // n x m, orthonormal columns

  int dimension() const { return static_cast<int>(basis.cols()); }
  Matrix Projector() const { return basis * basis.transpose(); }
};

// Throws NoSuchEigenvalue when no group lies within tol of lambda.
Eigenspace EigenspaceOf(const Spectrum& s, double lambda,
                        double tol = kDefaultSpectralTolerance);

enum class Separability { kSeparable, kInconclusive };
std::string_view SeparabilityName(Separability v);

struct DifferingEigenvalueWitness {
  double value = 0.0;
  int graph = 0;     // 1 or 2: whose spectrum holds the eigenvalue
  double norm = 0.0;  // ||X^T V_lambda||_F

  friend bool operator==(const DifferingEigenvalueWitness&,
                         const DifferingEigenvalueWitness&) = default;
};

struct MultiplicityWitness {
  double value = 0.0;
  int multiplicity1 = 0;
  int multiplicity2 = 0;
  double norm1 = 0.0;  // ||X1^T Q_n||_F
  double norm2 = 0.0;  // ||X2^T Q̂_n||_F

  friend bool operator==(const MultiplicityWitness&,
                         const MultiplicityWitness&) = default;
};

// Outcome of the three sufficient input/spectrum conditions under which some
// GNN separates two graphs:
//   1. the feature row multisets differ;
//   2. an eigenvalue of one graph is absent from the other and the features
//      are not orthogonal to its eigenspace;
//   3. a shared eigenvalue has different multiplicities and the features are
//      not orthogonal to the non-shared part of either eigenspace.
struct ConditionReport {
  bool cond1_signals_differ = false;
  std::optional<DifferingEigenvalueWitness> cond2_witness;
  std::optional<MultiplicityWitness> cond3_witness;
  Separability verdict = Separability::kInconclusive;

  friend bool operator==(const ConditionReport&,
                         const ConditionReport&) = default;
};

// Throws DimensionMismatch when feature rows do not match graph sizes or the
// feature widths differ.
ConditionReport CheckSeparationConditions(
    const Graph& g1, const Graph& g2, const FeatureMatrix& x1,
    const FeatureMatrix& x2, double tol = kDefaultSpectralTolerance);

// Degree-(q-1) polynomial with response 1 at mus[target] and 0 at every other
// node, built from the Lagrange basis. Throws DegenerateNodes when two nodes
// lie within min_separation of each other.
FilterParams IsolatingFilter(std::span<const double> mus, int target,
                             double min_separation = kDefaultSpectralTolerance);

// Isolating filter for one group of g's grouped spectrum.
FilterParams IsolatingFilterForGroup(const Spectrum& s, int group_index);

// H(S) = sum_k h_k S^k by Horner's rule over matrices.
Matrix FilterMatrix(const Graph& g, const FilterParams& h);

enum class AbsEigvecVerdict { kSeparable, kInconclusive, kNotApplicable };
std::string_view AbsEigvecVerdictName(AbsEigvecVerdict v);

// For graphs sharing the same simple spectrum, compares the row multisets of
// the entrywise-absolute eigenvector matrices. Differing rows prove the graphs
// non-isomorphic; otherwise the test is inconclusive.
AbsEigvecVerdict AbsoluteEigenvectorTest(
    const Graph& g1, const Graph& g2, double tol = kDefaultSpectralTolerance);

}  // namespace spectrawl

#endif  // SPECTRAWL_SPECTRAL_HPP_
