// Copyright 2026 The oskit Authors
//
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

#pragma once

#include <cstdint>

namespace oskit {

// Counter-based generator built on the SplitMix64 finalizer. The output at
// (seed, stream, counter) is a pure function of those three integers, so a
// path can be regenerated independently of every other path.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t bits(std::uint64_t counter) const;
  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform(std::uint64_t counter) const;
  // Standard normal; index 2k and 2k+1 share one Box-Muller pair.
  double normal(std::uint64_t index) const;

  // Independent child stream, e.g. one per Monte-Carlo path.
  CounterRng split(std::uint64_t stream) const;

 private:
  std::uint64_t key_;
};

// Sequential view over a CounterRng.
class RngStream {
 public:
  explicit RngStream(CounterRng rng) : rng_(rng) {}
  RngStream(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}

  double uniform() { return rng_.uniform(next_++); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return rng_.bits(next_++) % n; }

 private:
  CounterRng rng_;
  std::uint64_t next_ = 0;
  std::uint64_t normal_index_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace oskit
