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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oskit/error.hpp"
#include "oskit/freefield.hpp"
#include "oskit/rng.hpp"

using namespace oskit;
using namespace oskit::freefield;
using std::numbers::pi;

namespace {

const MassMeasure single = MassMeasure::atomic({{1.0, 1.0}});
const MassMeasure pair = MassMeasure::atomic({{1.0, 1.0}, {2.0, 1.0}});

MatrixXd halfspace_points(int d, int count, std::uint64_t seed) {
  RngStream rng(seed, 0);
  MatrixXd p(d, count);
  for (int j = 0; j < count; ++j) {
    p(0, j) = rng.uniform(0.05, 3.0);
    for (int i = 1; i < d; ++i) p(i, j) = rng.uniform(-3.0, 3.0);
  }
  return p;
}

}  // namespace

TEST_CASE("Theta density of an atom") {
  CHECK(theta_density(single, 2.0) == doctest::Approx(1.0 / (5.0 * pi)));
}

TEST_CASE("Theta_t closed form against the p0 integral") {
  for (const auto& rho : {single, pair})
    for (double t : {0.0, 0.5, 2.0})
      for (double pb : {0.0, 0.7}) CHECK(theta_t_check(rho, t, pb).rel_error <= 1e-7);
  CHECK(theta_t(single, 1.0, 0.0) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("multiplicativity singles out one atom") {
  for (double t : {0.3, 1.5}) {
    CHECK(multiplicativity_defect(single, t, 0.4, 0.5) < 1e-14);
    CHECK(multiplicativity_defect(pair, t, 0.4, 0.5) > 1e-3);
  }
}

TEST_CASE("one-dimensional two-point function solves the ODE") {
  for (double x : {-2.0, -0.5, 0.5, 1.0, 3.0}) CHECK(ode_residual(1.0, x) / std::exp(-std::abs(x)) < 1e-6);
  CHECK(schwinger_2pt(single, 1, VectorXd::Constant(1, 0.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(ode_residual(1.0, 1e-3), Error);
}

TEST_CASE("three-dimensional normalisation is 2 pi") {
  CHECK(schwinger_d3_constant() == doctest::Approx(2.0 * pi).epsilon(1e-12));
  VectorXd x(3);
  x << 0.3, 0.4, 1.2;
  CHECK(schwinger_2pt(single, 3, x) == doctest::Approx(2.0 * pi * std::exp(-1.3) / 1.3).epsilon(1e-12));
}

TEST_CASE("power law densities") {
  for (double s : {0.5, 1.0, 1.5}) {
    const double closed = 1.0 / (2.0 * std::sin(pi * s / 2.0));
    CHECK(power_theta_constant(s) == doctest::Approx(closed).epsilon(1e-9));
    const MassMeasure rho = MassMeasure::power_law(s);
    std::vector<double> r, v;
    for (double x : {0.01, 0.1, 1.0, 10.0}) {
      r.push_back(x);
      v.push_back(schwinger_2pt(rho, 3, VectorXd::Constant(3, x / std::sqrt(3.0))));
      CHECK(power_schwinger_quadrature(s, x) == doctest::Approx(v.back()).epsilon(1e-8));
    }
    CHECK(loglog_slope(r, v) == doctest::Approx(-1.0 - s).epsilon(1e-9));
  }
  CHECK_THROWS_AS(MassMeasure::power_law(2.0).validate(), Error);
  CHECK_THROWS_AS(schwinger_2pt(MassMeasure::power_law(1.0), 1, VectorXd::Constant(1, 1.0)), Error);
}

TEST_CASE("half-space reflected Grams are PSD") {
  for (int d : {1, 3})
    for (const auto& rho : {single, pair}) CHECK(halfspace_rp_check(rho, d, halfspace_points(d, 20, d)).psd());
  MatrixXd bad = halfspace_points(3, 4, 1);
  bad(0, 2) = -0.1;
  CHECK_THROWS_AS(halfspace_gram(single, 3, bad), Error);
}

TEST_CASE("loglog slope of an exact power") {
  CHECK(loglog_slope({1.0, 2.0, 4.0}, {3.0, 0.75, 0.1875}) == doctest::Approx(-2.0));
}
