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
#include "oskit/ospaths.hpp"

using namespace oskit;
using namespace oskit::ospaths;

TEST_CASE("OU covariance is multiplicative along ordered times") {
  const MatrixXd c = ou_covariance(0.8, {0.0, 0.5, 1.7});
  CHECK(c(0, 2) == doctest::Approx(c(0, 1) * c(1, 2)).epsilon(1e-15));
  CHECK(ou_covariance(1.0, {3.0})(0, 0) == 1.0);
  std::vector<double> t;
  for (int i = 0; i < 64; ++i) t.push_back(std::fmod(i * 0.6180339887, 5.0));
  CHECK(psd_verdict(ou_covariance(1.3, t), 1e-10).psd());
}

TEST_CASE("Markov split of OU and squared exponential") {
  for (Index present : {1, 2, 3}) {
    const MarkovSplit ou = markov_property_check(ou_covariance(1.0, {0, 0.4, 1.1, 1.5, 2.7}), present);
    CHECK(ou.cross_residual <= 1e-12);
    CHECK(ou.is_markov);
  }
  const MarkovSplit sq = markov_property_check(sqexp_covariance(1.0, {0, 1, 2}), 1);
  CHECK(sq.cross_residual > 1e-3);
  CHECK_FALSE(sq.is_markov);
  CHECK(markov_property_check(ou_covariance(1.0, {0, 1}), 0).cross_residual == 0.0);
  CHECK_THROWS_AS(markov_property_check(MatrixXd::Zero(3, 3), 1), Error);
}

TEST_CASE("Gaussian sampling matches the covariance") {
  GaussianSpec spec{GaussianSpec::Kind::OU, 1.0, {0.0, 1.0}, 42};
  const GaussianSample s = sample_gaussian(spec, 100000);
  CHECK(s.max_z <= 5.0);
  CHECK(s.empirical(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(0.03));
  CHECK(s.empirical(0, 0) == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("sampling is reproducible") {
  GaussianSpec spec{GaussianSpec::Kind::OU, 0.5, {0.0, 0.3, 0.9}, 7};
  const GaussianSample a = sample_gaussian(spec, 500, true), b = sample_gaussian(spec, 500, true);
  CHECK((a.paths - b.paths).norm() == 0.0);
  CHECK((sample_path(spec, 17) - a.paths.row(17).transpose()).norm() == 0.0);
  spec.seed = 8;
  CHECK((sample_gaussian(spec, 500, true).paths - a.paths).norm() > 0.0);
}

TEST_CASE("constant process") {
  GaussianSpec spec{GaussianSpec::Kind::OU, 0.0, {0.0, 1.0, 5.0}, 3};
  for (std::uint64_t p = 0; p < 10; ++p) {
    const VectorXd v = sample_path(spec, p);
    CHECK(v.maxCoeff() - v.minCoeff() < 1e-12);
  }
}

TEST_CASE("heat semigroup") {
  const auto gauss = [](double var) {
    return [var](double x) { return std::exp(-x * x / (2 * var)) / std::sqrt(2 * std::numbers::pi * var); };
  };
  const Grid f = Grid::sample(-20, 20, 801, gauss(1.0));
  const Grid a = heat_semigroup(heat_semigroup(f, 0.3), 0.7), b = heat_semigroup(f, 1.0);
  CHECK((a.values - b.values).lpNorm<Eigen::Infinity>() <= 1e-8);
  for (Index i = 0; i < b.size(); ++i) CHECK(b.values(i) == doctest::Approx(gauss(2.0)(b.x(i))).epsilon(1e-8).scale(1.0));
  const Grid one = heat_semigroup(Grid::sample(-20, 20, 801, [](double) { return 1.0; }), 0.5);
  CHECK((one.values.array() - 1.0).abs().maxCoeff() <= 1e-10);
  CHECK_THROWS_AS(heat_semigroup(Grid::sample(-20, 20, 41, gauss(1.0)), 1e-4), Error);
}

TEST_CASE("Feynman-Kac estimates") {
  CHECK(feynman_kac_mc(TestFunction::One, 1.0, 0.3, 1000, 1).mc_estimate == 1.0);
  const FeynmanKac ind = feynman_kac_mc(TestFunction::IndicatorPos, 1.0, 0.0, 100000, 7);
  CHECK(ind.analytic == doctest::Approx(0.5));
  CHECK(std::abs(ind.z_score) <= 3.0);
  const FeynmanKac id = feynman_kac_mc(TestFunction::Identity, 2.0, 0.7, 100000, 8);
  CHECK(id.analytic == doctest::Approx(0.7));
  CHECK(std::abs(id.z_score) <= 3.0);
  const double t = 0.5, x = 0.5;
  // e^{-x^2/2} smoothed by variance t.
  const double want = std::exp(-x * x / (2 * (1 + t))) / std::sqrt(1 + t);
  CHECK(heat_at(TestFunction::Gaussian, t, x) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("Mehler step fixes the ground state") {
  const Grid g = Grid::sample(-12, 12, 481, [](double x) { return std::exp(-x * x / 4); });
  const Grid m = mehler_step(g, 0.5);
  for (Index i = 0; i < g.size(); ++i)
    if (std::abs(g.x(i)) < 6) CHECK(std::abs(m.values(i) - g.values(i)) <= 1e-8);
  CHECK(m.values.minCoeff() >= 0.0);
}

TEST_CASE("PSS monomials for reversible chains") {
  MatrixXd p2(2, 2);
  p2 << 0.7, 0.3, 0.3, 0.7;
  const MarkovMatrix chain(p2);
  CHECK(chain.reversible());
  const PssReport r = pss_axiom_check(chain, {1, 2, 3}, 500, 31);
  CHECK(r.pass);
  CHECK(r.min_monomial >= -1e-12);
  // Identity insertions reduce to <Omega, Omega> = 1.
  const std::vector<VectorXd> ones(3, VectorXd::Ones(2));
  CHECK(monomial(chain, ones, {1, 2}) == doctest::Approx(1.0));
  // Exhaustive check over 0/1 diagonals on the two-state chain.
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<VectorXd> diag(3, VectorXd(2));
    for (int k = 0; k < 6; ++k) diag[k / 2](k % 2) = (mask >> k) & 1;
    CHECK(monomial(chain, diag, {1, 3}) >= -1e-12);
  }
}

TEST_CASE("non-reversible chains are refused") {
  MatrixXd p(3, 3);
  p << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  p = 0.5 * p + 0.5 * MatrixXd::Identity(3, 3);
  p(0, 1) = 0.3;
  p(0, 2) = 0.2;
  const MarkovMatrix chain(p);
  CHECK_FALSE(chain.reversible());
  CHECK_THROWS_AS(pss_axiom_check(chain, {1}, 10, 1), Error);
}
