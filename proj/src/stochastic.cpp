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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "spectrawl/error.hpp"
#include "spectrawl/gnn.hpp"
#include "spectrawl/random.hpp"

namespace spectrawl {

namespace {

constexpr std::uint64_t kChunkSize = 4096;
constexpr std::uint64_t kSecondStream = 0x5851f42d4c957f2dULL;

double WhiteSample(const StochasticConfig& cfg, double scale,
                   std::uint64_t sample, std::uint64_t node) {
  const std::uint64_t bits = CounterHash(cfg.seed, sample, node);
  if (cfg.distribution == WhiteNoise::kRademacher) {
    return (bits >> 63) ? scale : -scale;
  }
  // Box-Muller; u1 lies in (0, 1] so the log is finite.
  const double u1 = 1.0 - ToUnit(bits);
  const double u2 = ToUnit(CounterHash(cfg.seed ^ kSecondStream, sample, node));
  return scale * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

struct ChunkSums {
  Vector sum_sq;
  Vector sum_quad;
};

ChunkSums RunChunk(const Matrix& s, const FilterParams& h,
                   const StochasticConfig& cfg, std::uint64_t begin,
                   std::uint64_t end) {
  const auto n = s.rows();
  const double scale = std::sqrt(cfg.variance);
  ChunkSums sums{Vector::Zero(n), Vector::Zero(n)};
  Vector x(n);
  Vector z(n);
  Vector tmp(n);
  for (std::uint64_t sample = begin; sample < end; ++sample) {
    for (Eigen::Index i = 0; i < n; ++i) {
      x[i] = WhiteSample(cfg, scale, sample, static_cast<std::uint64_t>(i));
    }
    z = h[h.length() - 1] * x;
    for (int k = h.length() - 2; k >= 0; --k) {
      tmp.noalias() = s * z;
      z = tmp + h[k] * x;
    }
    const Vector sq = z.cwiseAbs2();
    sums.sum_sq += sq;
    sums.sum_quad += sq.cwiseAbs2();
  }
  return sums;
}

}  // namespace

VarianceEstimate StochasticVariance(const Graph& g, const FilterParams& h,
                                    const StochasticConfig& config) {
  if (!(config.variance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "variance must be positive");
  }
  if (config.samples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  }
  const std::uint64_t chunks = (config.samples + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkSums> partial(chunks);

  unsigned workers = config.threads ? config.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(config.samples, begin + kChunkSize);
      partial[c] = RunChunk(g.adjacency(), h, config, begin, end);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  const auto n = g.size();
  Vector sum_sq = Vector::Zero(n);
  Vector sum_quad = Vector::Zero(n);
  for (const auto& p : partial) {
    sum_sq += p.sum_sq;
    sum_quad += p.sum_quad;
  }
  const double m = static_cast<double>(config.samples);
  VarianceEstimate out;
  out.estimate = sum_sq / m;
  out.standard_error = Vector::Zero(n);
  if (config.samples > 1) {
    // Unbiased sample variance of z^2, then the standard error of its mean.
    const Vector spread =
        ((sum_quad - m * out.estimate.cwiseAbs2()) / (m - 1.0)).cwiseMax(0.0);
    out.standard_error = (spread / m).cwiseSqrt();
  }
  return out;
}

}  // namespace spectrawl
