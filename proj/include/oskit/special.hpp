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

#include <complex>

namespace oskit {

using cplx = std::complex<double>;

// Lanczos approximation (g = 7, 9 terms) with reflection for Re z < 1/2.
cplx gamma(cplx z);
double gamma(double x);
// 1/Gamma(z); exactly zero at the poles.
cplx rgamma(cplx z);
cplx digamma(cplx z);

bool is_nonpositive_integer(cplx z, double tol = 1e-13);

struct HypParams {
  cplx a;
  cplx b;
  cplx c;
};

// Hard cap on series terms before NONCONVERGENT.
inline constexpr int kHypTermCap = 10000;

// Gauss 2F1 at real x < 1. Direct series on |x| <= 1/2, Pfaff for x < -1/2,
// connection formulas around 1 (including the logarithmic integer cases)
// for 1/2 < x < 1.
cplx hyp2f1(const HypParams& p, double x);

// Raw power series, |x| < 1.
cplx hyp2f1_series(const HypParams& p, double x);

// Independent evaluation for cross-checks: Euler's transformation on
// [-1/2, 1), the b-sided Pfaff transformation below -1/2.
cplx hyp2f1_alternate(const HypParams& p, double x);

}  // namespace oskit
