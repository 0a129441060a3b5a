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
#include "oskit/kernels.hpp"
#include "oskit/rng.hpp"

using namespace oskit;
using Eigen::MatrixXd;

namespace {

MatrixXd uniform_line(double lo, double hi, int count) {
  MatrixXd p(1, count);
  for (int i = 0; i < count; ++i) p(0, i) = lo + (hi - lo) * i / (count - 1);
  return p;
}

// Composite Simpson on [0, beta]; phi is smooth inside the period.
double simpson_coefficient(double lambda, double beta, int n) {
  const int m = 20000;
  const double h = beta / m, k = 2.0 * std::numbers::pi * n / beta;
  double sum = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double x = i * h;
    const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * (std::exp(-lambda * x) + std::exp(-lambda * (beta - x))) * std::cos(k * x);
  }
  return sum * h / 3.0 / beta;
}

}  // namespace

TEST_CASE("exponential kernel Gram is PSD") {
  for (double lambda : {0.1, 1.0, 10.0}) {
    const MatC g = gram(KernelSpec::exp_line(lambda), uniform_line(-10, 10, 64));
    const GramReport r = psd_verdict(g, 1e-10);
    CHECK(r.psd());
    CHECK(r.min_eig >= -1e-10 * r.max_eig);
  }
}

TEST_CASE("reflected exponential kernel factorises") {
  const MatrixXd pts = uniform_line(0.2, 5, 16);
  const MatC g = reflected_gram(KernelSpec::exp_line(0.7), ReflectionGeometry::line(), pts);
  for (Index i = 0; i < 16; ++i)
    for (Index j = 0; j < 16; ++j)
      CHECK(g(i, j).real() == doctest::Approx(std::exp(-0.7 * (pts(0, i) + pts(0, j)))).epsilon(1e-14));
  const Eigen::VectorXd s = singular_values(g);
  CHECK(s(1) <= 1e-10 * s(0));
}

TEST_CASE("reflected gram refuses points outside the positive region") {
  MatrixXd pts(1, 2);
  pts << 0.5, -0.5;
  CHECK_THROWS_AS(reflected_gram(KernelSpec::exp_line(1), ReflectionGeometry::line(), pts), Error);
}

TEST_CASE("periodic green function") {
  const double lambda = 1.3, beta = 2.0;
  CHECK(periodic_green(lambda, beta, 0.0) == doctest::Approx(1.0 + std::exp(-lambda * beta)));
  for (double x : {0.1, 0.7, 1.9}) {
    CHECK(periodic_green(lambda, beta, x) == doctest::Approx(periodic_green(lambda, beta, x + beta)));
    CHECK(periodic_green(lambda, beta, x) == doctest::Approx(periodic_green(lambda, beta, beta - x)));
  }
}

TEST_CASE("periodic fourier coefficients against Simpson") {
  for (double lambda : {0.5, 1.0, 4.0})
    for (double beta : {0.5, 1.0, 4.0}) {
      const FourierCoefficients fc = periodic_fourier_coefficients(lambda, beta, 64);
      CHECK(fc.max_rel_error <= 1e-8);
      CHECK(fc.min_coefficient > 0.0);
      for (int n : {0, 1, 5}) {
        const double ref = simpson_coefficient(lambda, beta, n);
        CHECK(fc.closed_form[64 + n] == doctest::Approx(ref).epsilon(1e-9));
      }
    }
}

TEST_CASE("circle geometry reflects about zero") {
  const ReflectionGeometry c = ReflectionGeometry::circle(2.0);
  Eigen::VectorXd x(1);
  x << 0.3;
  CHECK(c.in_plus(x));
  CHECK_FALSE(c.in_plus(c.tau(x)));
  MatrixXd pts(1, 3);
  pts << 0.1, 0.5, 0.9;
  const GeometryCheck gc = check_geometry(c, pts);
  CHECK(gc.involution_residual < 1e-15);
  CHECK(gc.tau_leaves_plus);
  const MatC g = reflected_gram(KernelSpec::periodic_green(1.0, 2.0), c, pts);
  CHECK(psd_verdict(g, 1e-10).psd());
}

TEST_CASE("coulomb kernel is reflection positive in three dimensions") {
  RngStream rng(2, 0);
  MatrixXd pts(3, 25);
  for (Index i = 0; i < pts.size(); ++i) pts(i) = rng.uniform(-2.0, 2.0);
  pts.row(0) = pts.row(0).array().abs() + 0.05;
  const KernelSpec k = KernelSpec::power_law(1.0, 3);
  CHECK(psd_verdict(reflected_gram(k, ReflectionGeometry::halfspace(3), pts), 1e-10).psd());
  CHECK_THROWS_AS(gram(k, pts), Error);
}

TEST_CASE("custom tables pass through") {
  MatC t(2, 2);
  t << 2.0, 1.0, 1.0, 2.0;
  const MatC g = gram(KernelSpec::custom(t), MatrixXd::Zero(1, 2));
  CHECK((g - t).norm() == 0.0);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(KernelSpec::exp_line(-1.0).validate(), Error);
  CHECK_THROWS_AS(KernelSpec::power_law(3.5, 3).validate(), Error);
  CHECK_THROWS_AS(KernelSpec::hyp_psi(0.0, 2).validate(), Error);
}

TEST_CASE("interval kernels for Laplace transforms") {
  const IntervalReport atom = interval_rp_check(SpectralMeasure::scalar({{1.0, 1.0}}), 2.0);
  CHECK(atom.group_kernel.psd());
  CHECK(atom.semigroup_kernel.psd());
  CHECK(atom.prediction_consistent);

  const double beta = 2.0;
  const auto pair = SpectralMeasure::scalar({{1.0, 1.0}, {-1.0, std::exp(-beta)}}, Support::Real);
  const IntervalReport periodic = interval_rp_check(pair, beta / 2);
  CHECK(periodic.group_kernel.psd());
  CHECK(periodic.semigroup_kernel.psd());

  const IntervalReport neg = interval_rp_check(SpectralMeasure::scalar({{-1.0, 1.0}}, Support::Real), 2.0);
  CHECK(neg.group_kernel.min_eig < -1e-6);
  CHECK(neg.prediction_consistent);
}

TEST_CASE("chebyshev nodes stay inside the interval") {
  const Eigen::VectorXd t = chebyshev_nodes(-1.0, 3.0, 24);
  CHECK(t.size() == 24);
  CHECK(t.minCoeff() > -1.0);
  CHECK(t.maxCoeff() < 3.0);
}
