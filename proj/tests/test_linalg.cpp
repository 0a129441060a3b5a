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
#include <set>

#include "doctest.h"
#include "oskit/error.hpp"
#include "oskit/linalg.hpp"
#include "oskit/quadrature.hpp"
#include "oskit/rng.hpp"

using namespace oskit;

TEST_CASE("psd verdict uses the relative floor") {
  Eigen::MatrixXd m = Eigen::Vector2d(2.0, -1e-11).asDiagonal();
  CHECK(psd_verdict(m, 1e-10).psd());
  m(1, 1) = -1e-9;
  const GramReport r = psd_verdict(m, 1e-10);
  CHECK_FALSE(r.psd());
  CHECK(r.relative_min() == doctest::Approx(-0.5e-9));
}

TEST_CASE("psd verdict rejects non-hermitian input") {
  MatC m(2, 2);
  m << 1.0, cplx(0.0, 1.0), cplx(0.0, 1.0), 1.0;
  CHECK_THROWS_AS(psd_verdict(m, 1e-10), Error);
}

TEST_CASE("rank, range and kernel agree") {
  RngStream rng(1, 0);
  MatC a(5, 2), b(2, 4);
  for (Index i = 0; i < a.size(); ++i) a(i) = cplx(rng.normal(), rng.normal());
  for (Index i = 0; i < b.size(); ++i) b(i) = cplx(rng.normal(), rng.normal());
  const MatC m = a * b;
  CHECK(numerical_rank(m, 1e-10) == 2);
  const MatC range = orthonormal_range<cplx>(m);
  const MatC kernel = orthonormal_kernel<cplx>(m);
  CHECK(range.cols() == 2);
  CHECK(kernel.cols() == 2);
  CHECK((m * kernel).norm() < 1e-12);
  CHECK((projector<cplx>(range) * m - m).norm() < 1e-12);
}

TEST_CASE("hermitian_apply matches the matrix exponential of a diagonalisable input") {
  Eigen::MatrixXd h(2, 2);
  h << 0.0, 1.0, 1.0, 0.0;
  const Eigen::MatrixXd e = hermitian_apply<double>(h, [](double x) { return std::exp(x); });
  CHECK(e(0, 0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
  CHECK(e(0, 1) == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  const double v = integrate([](double x) { return std::pow(x, 31); }, 0.0, 1.0, 1, 16);
  CHECK(v == doctest::Approx(1.0 / 32).epsilon(1e-14));
  const double g = integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 8);
  CHECK(g == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("lorentzian fourier transform is e^{-h|t|}") {
  for (double h : {0.3, 1.0, 4.0})
    for (double t : {0.0, 0.5, 2.0, -1.3}) {
      const auto r = lorentzian_fourier(h, t);
      CHECK(r.value == doctest::Approx(std::exp(-h * std::abs(t))).epsilon(1e-9));
    }
}

TEST_CASE("counter rng is deterministic and splits") {
  const CounterRng a(42), b(42), c(43);
  CHECK(a.bits(7) == b.bits(7));
  CHECK(a.bits(7) != c.bits(7));
  CHECK(a.split(1).bits(0) != a.split(2).bits(0));
  double mean = 0.0, var = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = a.normal(i);
    mean += z;
    var += z * z;
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::abs(mean) < 5.0 / std::sqrt(n));
  CHECK(std::abs(var - 1.0) < 5.0 * std::sqrt(2.0 / n));
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform(i);
    CHECK((u > 0.0 && u < 1.0));
  }
}

TEST_CASE("error codes carry wire names") {
  CHECK(errc_name(Errc::NonInvolutiveTheta) == "NON_INVOLUTIVE_THETA");
  CHECK(errc_name(Errc::ZeroEigenvalueQuadrature) == "ZERO_EIGENVALUE_QUADRATURE");
  try {
    fail(Errc::NotPsd, "x");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPsd);
  }
}
