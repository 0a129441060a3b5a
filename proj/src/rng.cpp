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

#include "oskit/rng.hpp"

#include <cmath>
#include <numbers>

namespace oskit {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(splitmix64(seed) ^ splitmix64(stream * kGolden + 1))) {}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  return splitmix64(key_ + counter * kGolden);
}

double CounterRng::uniform(std::uint64_t counter) const {
  return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t index) const {
  const std::uint64_t pair = index / 2;
  const double r = std::sqrt(-2.0 * std::log(uniform(2 * pair)));
  const double angle = 2.0 * std::numbers::pi * uniform(2 * pair + 1);
  return index % 2 ? r * std::sin(angle) : r * std::cos(angle);
}

CounterRng CounterRng::split(std::uint64_t stream) const {
  CounterRng child(*this);
  child.key_ = splitmix64(key_ ^ splitmix64(stream + kGolden));
  return child;
}

double RngStream::normal() {
  // Normals live on their own counter range so mixing uniform() and normal()
  // calls stays reproducible.
  return rng_.split(0x6e6f726dULL).normal(normal_index_++);
}

}  // namespace oskit
