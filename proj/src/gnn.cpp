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

#include "spectrawl/gnn.hpp"

#include <vector>

#include "spectrawl/error.hpp"

namespace spectrawl {

Nonlinearity Nonlinearity::Parse(std::string_view name) {
  if (name == "relu") return Relu();
  if (name == "leaky" || name == "leaky_relu") return LeakyRelu();
  if (name == "linear") return Linear();
  if (name == "square") return Square();
  throw Error(ErrorCode::kInvalidArgument,
              "unknown nonlinearity '" + std::string(name) + "'");
}

std::string Nonlinearity::name() const {
  switch (kind_) {
    case Kind::kRelu: return "relu";
    case Kind::kLeakyRelu: return "leaky";
    case Kind::kLinear: return "linear";
    case Kind::kSquare: return "square";
  }
  return "unknown";
}

FeatureMatrix GraphFilter(const Graph& g, const FilterParams& h,
                          const FeatureMatrix& x) {
  if (x.rows() != g.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "input has " + std::to_string(x.rows()) + " rows for " +
                    std::to_string(g.size()) + " nodes");
  }
  FeatureMatrix z = h[h.length() - 1] * x;
  for (int k = h.length() - 2; k >= 0; --k) {
    z = g.adjacency() * z + h[k] * x;
  }
  return z;
}

FeatureMatrix GnnLayer(const Graph& g, const FeatureMatrix& x,
                       std::span<const Matrix> taps,
                       const Nonlinearity& sigma) {
  if (taps.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "layer needs at least one tap");
  }
  if (x.rows() != g.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "input rows vs node count");
  }
  for (const Matrix& tap : taps) {
    if (tap.rows() != x.cols() || tap.cols() != taps.front().cols()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "taps must all be " + std::to_string(x.cols()) + " x " +
                      std::to_string(taps.front().cols()));
    }
  }
  FeatureMatrix acc = x * taps.back();
  for (int k = static_cast<int>(taps.size()) - 2; k >= 0; --k) {
    acc = g.adjacency() * acc + x * taps[k];
  }
  return sigma.Apply(acc);
}

FeatureMatrix DiagPowers(const Graph& g, int depth) {
  if (depth < 1) {
    throw Error(ErrorCode::kInvalidArgument, "depth must be at least 1");
  }
  const int n = g.size();
  FeatureMatrix out(n, depth);
  Matrix power = Matrix::Identity(n, n);
  for (int k = 0; k < depth; ++k) {
    out.col(k) = power.diagonal();
    if (k + 1 < depth) power = power * g.adjacency();
  }
  return out;
}

namespace {

std::uint64_t CountWalks(const std::vector<std::vector<int>>& adj, int at,
                         int target, int remaining) {
  if (remaining == 0) return at == target ? 1 : 0;
  std::uint64_t total = 0;
  for (int next : adj[at]) total += CountWalks(adj, next, target, remaining - 1);
  return total;
}

}  // namespace

std::uint64_t ClosedWalkCount(const Graph& g, int v, int k) {
  if (k < 0 || v < 0 || v >= g.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "node or walk length");
  }
  if (k > kWalkOracleMaxLength || g.size() > kWalkOracleMaxNodes) {
    throw Error(ErrorCode::kTooLarge, "walk enumeration is capped at k <= 8 "
                                      "and n <= 12");
  }
  return CountWalks(g.Neighbors(), v, v, k);
}

Vector DiagonalModule(const Graph& g, const FilterParams& h,
                      const Nonlinearity& sigma) {
  const Eigen::Map<const Vector> coeffs(h.coeffs().data(), h.length());
  return sigma.Apply(DiagPowers(g, h.length()) * coeffs);
}

Vector SpectralDiagonalModule(const Spectrum& s, const FilterParams& h) {
  Vector response(s.size());
  for (int i = 0; i < s.size(); ++i) {
    response[i] = FrequencyResponse(h, s.eigenvalues[i]);
  }
  return s.eigenvectors.cwiseAbs2() * response;
}

Vector ConstantInputResponse(const Graph& g, const FilterParams& h,
                             const Nonlinearity& sigma) {
  return sigma.Apply(GraphFilter(g, h, Vector::Ones(g.size())));
}

FilterParams SelfConvolve(const FilterParams& h, double variance) {
  const int k = h.length();
  std::vector<double> out(2 * k - 1, 0.0);
  for (int m = 0; m < k; ++m) {
    for (int l = 0; l < k; ++l) out[m + l] += h[m] * h[l];
  }
  for (double& c : out) c *= variance;
  return FilterParams(std::move(out));
}

Vector ExpectedVariance(const Graph& g, const FilterParams& h,
                        double variance) {
  return DiagonalModule(g, SelfConvolve(h, variance), Nonlinearity::Linear());
}

}  // namespace spectrawl
