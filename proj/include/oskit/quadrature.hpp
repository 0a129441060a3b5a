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

namespace oskit {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached per order; the returned reference stays valid for the program lifetime.
const GaussRule& gauss_legendre(int order);

// Composite Gauss-Legendre over [a, b] with equal panels.
template <class F>
auto integrate(F&& f, double a, double b, int panels, int order = 32) {
  const GaussRule& rule = gauss_legendre(order);
  const double width = (b - a) / panels;
  using R = decltype(f(a));
  R sum{};
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * width;
    R panel{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    sum += panel * (0.5 * width);
  }
  return sum;
}

// Composite rule over explicit breakpoints (ascending), one panel per gap.
template <class F>
auto integrate_breaks(F&& f, const std::vector<double>& breaks, int order = 32) {
  using R = decltype(f(breaks.front()));
  R sum{};
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k)
    sum += integrate(f, breaks[k], breaks[k + 1], 1, order);
  return sum;
}

struct FourierQuadrature {
  double value = 0.0;
  long nodes = 0;
  double cutoff = 0.0;
};

// (1/pi) * integral over R of h/(h^2+p^2) e^{itp} dp for h > 0, by graded
// Gauss-Legendre panels on [0, P] plus an integration-by-parts tail beyond P.
// Exact value is exp(-|t| h).
FourierQuadrature lorentzian_fourier(double h, double t);

}  // namespace oskit
