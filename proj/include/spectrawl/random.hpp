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

#ifndef SPECTRAWL_RANDOM_HPP_
#define SPECTRAWL_RANDOM_HPP_

#include <cstdint>

namespace spectrawl {

// Platform-independent generators. The standard <random> distributions are
// implementation-defined, so everything seeded in this library goes through
// these instead.

// SplitMix64 finalizer: a bijective 64-bit mixer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Pure function of (seed, a, b); used for stream-splittable sampling where
// sample b of stream a must not depend on evaluation order.
constexpr std::uint64_t CounterHash(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b) {
  return Mix64(Mix64(Mix64(seed) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

// Maps the top 53 bits to [0, 1).
constexpr double ToUnit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double Uniform() { return ToUnit(Next()); }

  // Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = Next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace spectrawl

#endif  // SPECTRAWL_RANDOM_HPP_
