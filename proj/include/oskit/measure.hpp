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

#include <vector>

#include "oskit/linalg.hpp"

namespace oskit {

enum class Support { NonNeg, Real };

struct Atom {
  double loc = 0.0;
  MatC weight;  // 1x1 for scalar measures
};

// Finite atomic measure with scalar or PSD matrix weights.
struct SpectralMeasure {
  std::vector<Atom> atoms;
  Support support = Support::NonNeg;

  Index block() const { return atoms.empty() ? 1 : atoms.front().weight.rows(); }

  static SpectralMeasure scalar(const std::vector<std::pair<double, double>>& loc_weight,
                                Support support = Support::NonNeg) {
    SpectralMeasure m;
    m.support = support;
    for (const auto& [loc, w] : loc_weight) m.atoms.push_back({loc, MatC::Constant(1, 1, w)});
    return m;
  }
};

// Throws MeasureNotPositive for non-PSD weights (beyond -1e-12) or
// inconsistent block sizes, NegativeLocation for NonNeg support.
void validate(const SpectralMeasure& m);

}  // namespace oskit
