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
#include "oskit/instances.hpp"
#include "oskit/kms.hpp"

using namespace oskit;
using namespace oskit::kms;
using Eigen::MatrixXd;

namespace {

KMSMeasure random_measure(double beta, Index block, std::uint64_t seed) {
  RngStream rng(seed, 1);
  std::vector<PlusAtom> atoms;
  for (int k = 0; k < 3; ++k) {
    const MatC a = instances::random_complex(block, block, rng);
    atoms.push_back({rng.uniform(0.0, 3.0), a * a.adjoint()});
  }
  return KMSMeasure(beta, atoms);
}

MatrixXd rotation_generator(double mu, int pairs) {
  MatrixXd c = MatrixXd::Zero(2 * pairs, 2 * pairs);
  for (int k = 0; k < pairs; ++k) {
    c(2 * k, 2 * k + 1) = -mu;
    c(2 * k + 1, 2 * k) = mu;
  }
  return c;
}

}  // namespace

TEST_CASE("KMS boundary condition for random measures") {
  std::vector<double> times;
  for (int i = 0; i < 32; ++i) times.push_back(-5.0 + 10.0 * i / 31);
  for (std::uint64_t seed : {1, 2, 3}) {
    const KMSMeasure mu(random_measure(0.5 + seed, 2, seed));
    CHECK(kms_residual(mu, times) <= 1e-12);
    CHECK(mu.modular_residual() <= 1e-14);
    CHECK(mu.atoms().size() == 6);
  }
}

TEST_CASE("KMS function at the boundary is the conjugate") {
  const KMSMeasure mu(1.5, {{0.8, MatC::Constant(1, 1, 2.0)}});
  const cplx top = kms_function(mu, cplx(0.4, 1.5))(0, 0);
  const cplx bottom = kms_function(mu, cplx(0.4, 0.0))(0, 0);
  CHECK(std::abs(top - std::conj(bottom)) < 1e-14);
  CHECK_THROWS_AS(kms_function(mu, cplx(0.0, 1.6)), Error);
}

TEST_CASE("skew contraction validation") {
  MatrixXd sym(2, 2);
  sym << 0.0, 0.5, 0.5, 0.0;
  CHECK_THROWS_AS(SkewContraction::from(sym), Error);
  try {
    SkewContraction::from(rotation_generator(1.0, 1));
    FAIL("expected NOT_STRICT_CONTRACTION");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotStrictContraction);
  }
}

TEST_CASE("boundary values of the contraction function") {
  const auto c = SkewContraction::from(rotation_generator(0.6, 2));
  const MatC i = MatC::Identity(4, 4);
  const MatC ic = cplx(0, 1) * c.c.cast<cplx>();
  CHECK((phi_from_contraction(c, 2.0, 0.0) - (i + ic)).norm() < 1e-13);
  CHECK((phi_from_contraction(c, 2.0, 2.0) - (i - ic)).norm() < 1e-13);
  CHECK((phi_extended(c, 2.0, 2.7) - phi_from_contraction(c, 2.0, 0.7).conjugate()).norm() < 1e-13);
}

TEST_CASE("even and odd parts are thermal green functions") {
  const double beta = 1.5, mu = 0.5;
  const double kappa = std::log((1 + mu) / (1 - mu)) / beta;
  const auto c = SkewContraction::from(rotation_generator(mu, 1));
  for (double t : {0.0, 0.2, 0.75, 1.4}) {
    const ExtensionParts p = extension_parts(c, beta, t);
    CHECK((p.u_plus - thermal_green(kappa, beta, t, +1) * MatrixXd::Identity(2, 2)).norm() < 1e-13);
    CHECK((p.u_minus - thermal_green(kappa, beta, t, -1) * MatrixXd::Identity(2, 2)).norm() < 1e-13);
  }
  CHECK(thermal_green(kappa, beta, 0.3 + beta, -1) == doctest::Approx(-thermal_green(kappa, beta, 0.3, -1)));
  CHECK(thermal_green(kappa, beta, 0.3 + beta, +1) == doctest::Approx(thermal_green(kappa, beta, 0.3, +1)));
}

TEST_CASE("reflection positive extension and its sign-flipped control") {
  const auto grid = half_period_grid(1.0, 16);
  CHECK(grid.size() == 16);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == doctest::Approx(0.5));
  for (double mu : {0.2, 0.5, 0.8}) {
    const auto c = SkewContraction::from(rotation_generator(mu, 2));
    const ExtensionReport ok = rp_extension_check(c, 1.0, grid);
    CHECK(ok.group_pd.psd());
    CHECK(ok.reflected_pd.psd());
    const ExtensionReport flipped = rp_extension_check(c, 1.0, grid, 1e-8, true);
    CHECK_FALSE(flipped.group_pd.psd());
  }
}

TEST_CASE("extension check for a KMS measure") {
  const KMSMeasure mu = random_measure(1.0, 2, 4);
  const ExtensionReport r = rp_extension_check(mu, half_period_grid(1.0, 12));
  CHECK(r.group_pd.psd());
  CHECK(r.reflected_pd.psd());
}

TEST_CASE("matsubara coefficients against direct quadrature") {
  const double kappa = 1.0, beta = 2.0;
  const MatsubaraResult r = matsubara(kappa, beta, 32);
  CHECK(r.fft_check <= 1e-6);
  CHECK(r.raw_dft_check > r.fft_check);
  // Composite Simpson over each half period, where the integrand is smooth.
  for (int n : {0, 1, 2, 7}) {
    const int m = 20000;
    cplx sum = 0.0;
    for (int half = 0; half < 2; ++half) {
      const double h = beta / m;
      for (int i = 0; i <= m; ++i) {
        const double t = half * beta + i * h;
        const double tl = half == 0 ? std::min(t, beta - 1e-15) : std::max(t, beta + 1e-15);
        const double u = thermal_green(kappa, beta, tl, +1) + thermal_green(kappa, beta, tl, -1);
        const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * u * std::exp(cplx(0, -std::numbers::pi * n * t / beta)) * (h / 3.0);
      }
    }
    const cplx ref = sum / (2.0 * beta);
    CHECK(std::abs(matsubara_coefficient(kappa, beta, n) - ref.real()) < 1e-9);
    CHECK(std::abs(ref.imag()) < 1e-9);
  }
}

TEST_CASE("standard subspace roundtrip") {
  const StandardSubspaceModel model{{0.5, 2.0, 0.25, 4.0, 1.0}, {1, 0, 3, 2, 4}};
  const RoundtripResult r = standard_subspace_roundtrip(model);
  CHECK(r.im_residual < 1e-10);
  CHECK(r.skew_residual < 1e-12);
  CHECK(r.real_rank == 10);
  CHECK(r.contraction.norm == doctest::Approx(0.6).epsilon(1e-12));
  for (double t : {0.0, 0.3, 1.0}) {
    const MatC lhs = modular_pairing(model, r.basis, 1.0, t);
    CHECK((lhs - phi_from_contraction(r.contraction, 1.0, t)).norm() < 1e-10);
  }
}

TEST_CASE("modular relation is enforced") {
  const StandardSubspaceModel bad{{0.5, 3.0}, {1, 0}};
  try {
    standard_subspace_roundtrip(bad);
    FAIL("expected MODULAR_RELATION_VIOLATED");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ModularRelationViolated);
  }
}
