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

#include "oskit/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "oskit/error.hpp"

namespace oskit {

namespace {

using std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void check_c(const HypParams& p) {
  require(!is_nonpositive_integer(p.c), Errc::BadC, "c is a nonpositive integer");
}

cplx pochhammer(cplx a, int n) {
  cplx r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + static_cast<double>(k);
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Sums terms produced by next(k, term) until they stop mattering.
template <class Next>
cplx sum_series(cplx first, Next&& next, const char* what) {
  cplx sum = first, term = first;
  int quiet = 0;
  for (int k = 0; k < kHypTermCap; ++k) {
    term = next(k, term);
    sum += term;
    if (term == 0.0) return sum;
    quiet = std::abs(term) <= 1e-17 * std::abs(sum) ? quiet + 1 : 0;
    if (quiet >= 2) return sum;
  }
  fail(Errc::Nonconvergent, std::string(what) + ": term cap reached");
}

// c - a - b = 0, A&S 15.3.10.
cplx around_one_m0(const HypParams& p, double y) {
  const cplx a = p.a, b = p.b;
  const double ly = std::log(y);
  const cplx pre = gamma(a + b) * rgamma(a) * rgamma(b);
  cplx coef = 1.0;
  cplx sum = 0.0;
  int quiet = 0;
  for (int n = 0; n < kHypTermCap; ++n) {
    const double dn = n;
    const cplx term = coef * (2.0 * digamma(dn + 1.0) - digamma(a + dn) - digamma(b + dn) - ly);
    sum += term;
    quiet = std::abs(term) <= 1e-17 * std::abs(sum) ? quiet + 1 : 0;
    if (quiet >= 2 || coef == 0.0) return pre * sum;
    coef *= (a + dn) * (b + dn) / ((dn + 1.0) * (dn + 1.0)) * y;
  }
  fail(Errc::Nonconvergent, "2F1 logarithmic case m = 0");
}

// c = a + b + m, m >= 1, A&S 15.3.11.
cplx around_one_mpos(const HypParams& p, double y, int m) {
  const cplx a = p.a, b = p.b, c = p.c;
  cplx finite = 0.0;
  for (int n = 0; n < m; ++n)
    finite += pochhammer(a, n) * pochhammer(b, n) / (factorial(n) * pochhammer(1.0 - m, n)) *
              std::pow(y, n);
  finite *= gamma(static_cast<double>(m)) * gamma(c) * rgamma(a + double(m)) * rgamma(b + double(m));

  const cplx pre = ((m % 2) ? -1.0 : 1.0) * std::pow(y, m) * gamma(c) * rgamma(a) * rgamma(b);
  if (pre == 0.0) return finite;
  const double ly = std::log(y);
  cplx coef = 1.0 / factorial(m);
  cplx sum = 0.0;
  int quiet = 0;
  for (int n = 0; n < kHypTermCap; ++n) {
    const double dn = n;
    const cplx term = coef * (ly - digamma(dn + 1.0) - digamma(dn + m + 1.0) +
                              digamma(a + dn + double(m)) + digamma(b + dn + double(m)));
    sum += term;
    quiet = std::abs(term) <= 1e-17 * std::abs(sum) ? quiet + 1 : 0;
    if (quiet >= 2 || coef == 0.0) return finite - pre * sum;
    coef *= (a + dn + double(m)) * (b + dn + double(m)) / ((dn + 1.0) * (dn + m + 1.0)) * y;
  }
  fail(Errc::Nonconvergent, "2F1 logarithmic case m > 0");
}

// c = a + b - m, m >= 1, A&S 15.3.12.
cplx around_one_mneg(const HypParams& p, double y, int m) {
  const cplx a = p.a, b = p.b, c = p.c;
  const double dm = m;
  cplx finite = 0.0;
  for (int n = 0; n < m; ++n)
    finite += pochhammer(a - dm, n) * pochhammer(b - dm, n) /
              (factorial(n) * pochhammer(1.0 - dm, n)) * std::pow(y, n);
  finite *= gamma(dm) * gamma(c) * rgamma(a) * rgamma(b) * std::pow(y, -m);

  const cplx pre = ((m % 2) ? -1.0 : 1.0) * gamma(c) * rgamma(a - dm) * rgamma(b - dm);
  if (pre == 0.0) return finite;
  const double ly = std::log(y);
  cplx coef = 1.0 / factorial(m);
  cplx sum = 0.0;
  int quiet = 0;
  for (int n = 0; n < kHypTermCap; ++n) {
    const double dn = n;
    const cplx term = coef * (ly - digamma(dn + 1.0) - digamma(dn + dm + 1.0) +
                              digamma(a + dn) + digamma(b + dn));
    sum += term;
    quiet = std::abs(term) <= 1e-17 * std::abs(sum) ? quiet + 1 : 0;
    if (quiet >= 2 || coef == 0.0) return finite - pre * sum;
    coef *= (a + dn) * (b + dn) / ((dn + 1.0) * (dn + dm + 1.0)) * y;
  }
  fail(Errc::Nonconvergent, "2F1 logarithmic case m < 0");
}

cplx around_one(const HypParams& p, double x) {
  const double y = 1.0 - x;
  const cplx m = p.c - p.a - p.b;
  const double mr = std::round(m.real());
  if (std::abs(m.imag()) < 1e-13 && std::abs(m.real() - mr) < 1e-13) {
    const int mi = static_cast<int>(mr);
    if (mi == 0) return around_one_m0(p, y);
    return mi > 0 ? around_one_mpos(p, y, mi) : around_one_mneg(p, y, -mi);
  }
  const cplx t1 = gamma(p.c) * gamma(m) * rgamma(p.c - p.a) * rgamma(p.c - p.b) *
                  hyp2f1_series({p.a, p.b, 1.0 - m}, y);
  const cplx t2 = std::pow(cplx(y), m) * gamma(p.c) * gamma(-m) * rgamma(p.a) * rgamma(p.b) *
                  hyp2f1_series({p.c - p.a, p.c - p.b, 1.0 + m}, y);
  return t1 + t2;
}

}  // namespace

bool is_nonpositive_integer(cplx z, double tol) {
  return z.real() < 0.5 && std::abs(z.imag()) < tol &&
         std::abs(z.real() - std::round(z.real())) < tol;
}

cplx gamma(cplx z) {
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma(1.0 - z));
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double gamma(double x) { return gamma(cplx(x)).real(); }

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z, 1e-15)) return 0.0;
  return 1.0 / gamma(z);
}

cplx digamma(cplx z) {
  if (z.real() < 0.5) return digamma(1.0 - z) - pi / std::tan(pi * z);
  cplx shift = 0.0;
  while (std::abs(z) < 12.0 || z.real() < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  static constexpr std::array<double, 7> bern{1.0 / 6,  -1.0 / 30,     1.0 / 42, -1.0 / 30,
                                              5.0 / 66, -691.0 / 2730, 7.0 / 6};
  const cplx inv2 = 1.0 / (z * z);
  cplx pw = inv2, series = 0.0;
  for (std::size_t k = 0; k < bern.size(); ++k) {
    series += bern[k] / (2.0 * (k + 1)) * pw;
    pw *= inv2;
  }
  return shift + std::log(z) - 0.5 / z - series;
}

cplx hyp2f1_series(const HypParams& p, double x) {
  check_c(p);
  require(std::abs(x) < 1.0, Errc::Nonconvergent, "series needs |x| < 1");
  return sum_series(
      1.0,
      [&](int k, cplx term) {
        const double dk = k;
        return term * (p.a + dk) * (p.b + dk) / ((p.c + dk) * (dk + 1.0)) * x;
      },
      "2F1 series");
}

cplx hyp2f1(const HypParams& p, double x) {
  check_c(p);
  require(x < 1.0, Errc::ArgumentOnCut, "2F1 argument " + std::to_string(x) + " is on [1, inf)");
  if (x == 0.0) return 1.0;
  // Terminating series are polynomials and valid everywhere.
  if (is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b)) {
    cplx sum = 1.0, term = 1.0;
    for (int k = 0; term != 0.0 && k < kHypTermCap; ++k) {
      const double dk = k;
      term *= (p.a + dk) * (p.b + dk) / ((p.c + dk) * (dk + 1.0)) * x;
      sum += term;
    }
    return sum;
  }
  if (std::abs(x) <= 0.5) return hyp2f1_series(p, x);
  if (x < -0.5) return std::pow(cplx(1.0 - x), -p.a) * hyp2f1({p.a, p.c - p.b, p.c}, x / (x - 1.0));
  return around_one(p, x);
}

cplx hyp2f1_alternate(const HypParams& p, double x) {
  check_c(p);
  require(x < 1.0, Errc::ArgumentOnCut, "2F1 argument " + std::to_string(x) + " is on [1, inf)");
  if (x < -0.5)
    return std::pow(cplx(1.0 - x), -p.b) * hyp2f1_series({p.c - p.a, p.b, p.c}, x / (x - 1.0));
  return std::pow(cplx(1.0 - x), p.c - p.a - p.b) * hyp2f1_series({p.c - p.a, p.c - p.b, p.c}, x);
}

}  // namespace oskit
