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

// Reference values computed with mpmath at 30 digits.
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oskit/error.hpp"
#include "oskit/special.hpp"

using namespace oskit;

TEST_CASE("gamma against high-precision values") {
  const std::pair<double, double> ref[] = {
      {0.5, 1.7724538509055160273},  {1.5, 0.88622692545275801365},  {3.7, 4.1706517837966040301},
      {-0.5, -3.5449077018110320546}, {-2.3, -1.4471073942559181166}, {10.2, 570499.02784103506001}};
  for (auto [x, v] : ref) CHECK(oskit::gamma(x) == doctest::Approx(v).epsilon(1e-13));
}

TEST_CASE("rgamma vanishes at the poles") {
  for (int k = 0; k < 5; ++k) CHECK(std::abs(rgamma(cplx(-k, 0.0))) == 0.0);
  CHECK(rgamma(cplx(4.0, 0.0)).real() == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("digamma against high-precision values") {
  CHECK(digamma(0.5).real() == doctest::Approx(-1.9635100260214234794).epsilon(1e-13));
  CHECK(digamma(2.25).real() == doctest::Approx(0.57254646662373459191).epsilon(1e-13));
  const cplx z = digamma(cplx(0.5, 1.0));
  CHECK(z.real() == doctest::Approx(-0.051761650994412542793).epsilon(1e-12));
  CHECK(z.imag() == doctest::Approx(1.5649405178158792826).epsilon(1e-13));
}

TEST_CASE("gamma duplication formula") {
  for (double z : {0.3, 0.7, 1.3, 2.5, 4.1}) {
    const double lhs = oskit::gamma(z) * oskit::gamma(z + 0.5);
    const double rhs = std::pow(2.0, 1.0 - 2.0 * z) * std::sqrt(std::numbers::pi) * oskit::gamma(2.0 * z);
    CHECK(std::abs(lhs - rhs) / rhs < 1e-13);
  }
}

struct HypCase {
  double a, b, c, x, value;
};

TEST_CASE("hyp2f1 against high-precision values") {
  const HypCase cases[] = {{0.3, 1.7, 2.2, -4.0, 0.66478452164633784272},
                           {0.3, 1.7, 2.2, 0.9, 1.5573397295621036671},
                           {0.5, 0.5, 1.0, 0.9, 1.6412644143423707998},
                           {1.0, 2.0, 3.0, 0.99, 7.3771455687952057007},
                           {1.5, -0.5, 1.0, 0.6, 0.41207654311781363922},
                           {0.5, 0.5, 1.5, -0.75, 0.90459196123212178499}};
  for (const auto& k : cases) {
    const HypParams p{k.a, k.b, k.c};
    CAPTURE(k.x);
    CHECK(hyp2f1(p, k.x).real() == doctest::Approx(k.value).epsilon(1e-11));
    CHECK(hyp2f1_alternate(p, k.x).real() == doctest::Approx(k.value).epsilon(1e-11));
  }
}

TEST_CASE("hyp2f1 with conjugate parameters is real") {
  const HypParams p{cplx(0.5, 1.5), cplx(0.5, -1.5), cplx(1.0, 0.0)};
  const std::pair<double, double> ref[] = {
      {-3.0, -0.24695254464664698339}, {0.3, 2.1015684228221781393}, {0.95, 25.292424086463497282}};
  for (auto [x, v] : ref) {
    const cplx f = hyp2f1(p, x);
    CHECK(f.real() == doctest::Approx(v).epsilon(1e-11));
    CHECK(std::abs(f.imag()) < 1e-12 * std::abs(v));
  }
}

TEST_CASE("hyp2f1 closed forms") {
  // 2F1(1, 1; 2; x) = -log(1 - x) / x
  for (double x : {-4.0, -0.7, 0.2, 0.6, 0.97}) {
    const double want = -std::log1p(-x) / x;
    CHECK(hyp2f1({1.0, 1.0, 2.0}, x).real() == doctest::Approx(want).epsilon(1e-12));
  }
  // 2F1(a, b; b; x) = (1 - x)^{-a}
  for (double x : {-2.0, 0.4, 0.9}) CHECK(hyp2f1({0.7, 1.3, 1.3}, x).real() == doctest::Approx(std::pow(1 - x, -0.7)).epsilon(1e-12));
}

TEST_CASE("series and dispatcher agree inside the unit disc") {
  const HypParams p{0.3, 1.7, 2.2};
  for (double x : {-0.45, -0.1, 0.0, 0.3, 0.45}) CHECK(std::abs(hyp2f1(p, x) - hyp2f1_series(p, x)) < 1e-14);
}
