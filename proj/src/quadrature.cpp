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

#include "oskit/quadrature.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>

namespace oskit {

namespace {

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

FourierQuadrature lorentzian_fourier(double h, double t) {
  using std::numbers::pi;
  t = std::abs(t);
  const double cutoff = t > 0.0 ? std::max(1e3 * std::max(1.0, h), 100.0 / t) : 1e3 * std::max(1.0, h);
  const auto g = [h](double p) { return h / (pi * (h * h + p * p)); };

  // Geometric breakpoints resolve the peak at scale h; each gap is split so
  // that no panel spans more than half an oscillation period.
  std::vector<double> breaks{0.0};
  for (double b = h / 4; b < cutoff; b *= 2.0) breaks.push_back(b);
  breaks.push_back(cutoff);
  const double max_width = t > 0.0 ? pi / t : cutoff;
  constexpr int order = 16;
  FourierQuadrature out;
  out.cutoff = cutoff;
  double body = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const int panels = static_cast<int>(std::ceil((breaks[k + 1] - breaks[k]) / max_width));
    body += integrate([&](double p) { return g(p) * std::cos(t * p); }, breaks[k], breaks[k + 1],
                      panels, order);
    out.nodes += static_cast<long>(panels) * order;
  }

  double tail = 0.0;
  if (t == 0.0) {
    tail = (pi / 2 - std::atan(cutoff / h)) / pi;
  } else {
    // int_P^inf g e^{itp} dp = -e^{itP} sum_k (-1)^k g^(k)(P) / (it)^(k+1),
    // g^(k) taken from the partial fractions of 1/(h^2+p^2).
    const std::complex<double> it(0.0, t);
    const std::complex<double> ih(0.0, h);
    std::complex<double> sum = 0.0;
    double prev_mag = 1e300;
    double factorial = 1.0;
    for (int k = 0; k < 30; ++k) {
      if (k > 0) factorial *= k;
      const double sign = (k % 2) ? -1.0 : 1.0;
      const std::complex<double> deriv =
          (h / pi) / (2.0 * ih) * sign * factorial *
          (1.0 / std::pow(cutoff - ih, k + 1) - 1.0 / std::pow(cutoff + ih, k + 1));
      const std::complex<double> term = sign * deriv / std::pow(it, k + 1);
      if (std::abs(term) > prev_mag) break;
      sum += term;
      prev_mag = std::abs(term);
      if (std::abs(term) < 1e-18) break;
    }
    tail = (-std::exp(it * cutoff) * sum).real();
  }
  out.value = 2.0 * (body + tail);
  return out;
}

}  // namespace oskit
