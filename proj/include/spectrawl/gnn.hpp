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

#ifndef SPECTRAWL_GNN_HPP_
#define SPECTRAWL_GNN_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "spectrawl/filter.hpp"
#include "spectrawl/graph.hpp"
#include "spectrawl/spectral.hpp"

namespace spectrawl {

// Pointwise activation. ReLU maps 0 to 0; leaky slope defaults to 0.01.
class Nonlinearity {
 public:
  enum class Kind { kRelu, kLeakyRelu, kLinear, kSquare };

  static Nonlinearity Relu() { return Nonlinearity(Kind::kRelu, 0.0); }
  static Nonlinearity LeakyRelu(double alpha = 0.01) {
    return Nonlinearity(Kind::kLeakyRelu, alpha);
  }
  static Nonlinearity Linear() { return Nonlinearity(Kind::kLinear, 0.0); }
  static Nonlinearity Square() { return Nonlinearity(Kind::kSquare, 0.0); }

  // Accepts relu, leaky (or leaky_relu), linear, square.
  static Nonlinearity Parse(std::string_view name);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::string name() const;

  double operator()(double v) const {
    switch (kind_) {
      case Kind::kRelu: return v > 0.0 ? v : 0.0;
      case Kind::kLeakyRelu: return v > 0.0 ? v : alpha_ * v;
      case Kind::kLinear: return v;
      case Kind::kSquare: return v * v;
    }
    return v;
  }

  FeatureMatrix Apply(const FeatureMatrix& x) const {
    return x.unaryExpr([this](double v) { return (*this)(v); });
  }

 private:
  Nonlinearity(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  Kind kind_;
  double alpha_;
};

// z = sum_k h_k S^k x, evaluated as h_0 x + S(h_1 x + S(h_2 x + ...)).
// Throws DimensionMismatch when x.rows() != g.size().
FeatureMatrix GraphFilter(const Graph& g, const FilterParams& h,
                          const FeatureMatrix& x);

// Y = sigma(sum_k S^k X H_k) with taps H_0..H_{K-1}, each D_in x D_out.
FeatureMatrix GnnLayer(const Graph& g, const FeatureMatrix& x,
                       std::span<const Matrix> taps, const Nonlinearity& sigma);

// Column k holds diag(S^k), k = 0..depth-1: closed-walk counts per node.
FeatureMatrix DiagPowers(const Graph& g, int depth);

inline constexpr int kWalkOracleMaxLength = 8;
inline constexpr int kWalkOracleMaxNodes = 12;

// Closed walks of length k starting and ending at v, by depth-first
// enumeration. Test oracle for DiagPowers; throws TooLarge beyond k = 8 or
// n = 12.
std::uint64_t ClosedWalkCount(const Graph& g, int v, int k);

// y = sigma(sum_k h_k diag(S^k)).
Vector DiagonalModule(const Graph& g, const FilterParams& h,
                      const Nonlinearity& sigma);

// Pre-activation diagonal module from a spectrum: sum_n h(lambda_n) u_n^2.
Vector SpectralDiagonalModule(const Spectrum& s, const FilterParams& h);

// y = sigma(sum_k h_k S^k 1): the response to a constant input.
Vector ConstantInputResponse(const Graph& g, const FilterParams& h,
                             const Nonlinearity& sigma);

// h'_k = variance * sum_{m + l = k} h_m h_l, length 2K - 1.
FilterParams SelfConvolve(const FilterParams& h, double variance);

enum class WhiteNoise { kGaussian, kRademacher };

struct StochasticConfig {
  double variance = 1.0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  WhiteNoise distribution = WhiteNoise::kGaussian;
  // 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 0;
};

struct VarianceEstimate {
  Vector estimate;        // per-node mean of z^2
  Vector standard_error;  // per-node standard error of that mean
};

// Monte-Carlo variance of the filtered white input z = H(S) x. Entry `node` of
// sample `s` is a pure function of (seed, s, node), and partial sums are
// reduced in a fixed order, so the result is bit-identical for any thread
// count. Throws InvalidArgument for non-positive variance or zero samples.
VarianceEstimate StochasticVariance(const Graph& g, const FilterParams& h,
                                    const StochasticConfig& config);

// Closed-form expectation of StochasticVariance: sum_k h'_k diag(S^k).
Vector ExpectedVariance(const Graph& g, const FilterParams& h, double variance);

}  // namespace spectrawl

#endif  // SPECTRAWL_GNN_HPP_
