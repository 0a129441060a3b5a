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

#include "oskit/freefield.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "oskit/quadrature.hpp"
#include "oskit/special.hpp"

namespace oskit::freefield {

using std::numbers::pi;

MassMeasure MassMeasure::atomic(std::vector<MassAtom> atoms) {
  MassMeasure m;
  m.atoms = std::move(atoms);
  return m;
}

MassMeasure MassMeasure::power_law(double s) {
  MassMeasure m;
  m.kind = Kind::PowerLaw;
  m.s = s;
  return m;
}

void MassMeasure::validate() const {
  if (kind == Kind::PowerLaw) {
    require(s > 0.0 && s < 2.0, Errc::NotTame, "power law needs 0 < s < 2, got " + std::to_string(s));
    return;
  }
  require(!atoms.empty(), Errc::DomainViolation, "atomic mass measure has no atoms");
  for (const auto& a : atoms)
    require(a.m > 0.0 && a.w >= 0.0, Errc::DomainViolation, "atoms need m > 0 and w >= 0");
}

namespace {

// int_R g(u) du for g(u) = e^{s u} h(e^u) with geometric decay at both ends.
template <class F>
double log_mass_integral(F&& g, double lo, double hi) {
  const int panels = static_cast<int>(std::ceil(hi - lo));
  return integrate(g, lo, hi, std::max(panels, 1), 24);
}

// Cutoffs where e^{a u} (u -> -inf) and e^{-b u} (u -> +inf) drop below 1e-18.
std::pair<double, double> log_window(double a, double b, double centre = 0.0) {
  return {centre - 42.0 / a, centre + 42.0 / b};
}

}  // namespace

double power_theta_quadrature(double s, double p_norm) {
  MassMeasure::power_law(s).validate();
  require(p_norm > 0.0, Errc::OriginSingularity, "Theta_s is singular at p = 0");
  // (1/pi) int m^{s-1} / (m^2 + p^2) dm with m = e^u.
  const double c = std::log(p_norm);
  const auto [lo, hi] = log_window(s, 2.0 - s, c);
  return log_mass_integral(
             [&](double u) {
               const double m = std::exp(u);
               return std::exp(s * u) / (m * m + p_norm * p_norm);
             },
             lo, hi) /
         pi;
}

double power_theta_constant(double s) {
  static std::mutex mu;
  static std::map<double, double> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(s); it != cache.end()) return it->second;
  }
  const double value = power_theta_quadrature(s, 1.0);
  std::lock_guard lock(mu);
  return cache.emplace(s, value).first->second;
}

double theta_density(const MassMeasure& rho, double p_norm) {
  rho.validate();
  if (rho.kind == MassMeasure::Kind::PowerLaw) {
    require(p_norm > 0.0, Errc::OriginSingularity, "Theta_s is singular at p = 0");
    return power_theta_constant(rho.s) * std::pow(p_norm, rho.s - 2.0);
  }
  double sum = 0.0;
  for (const auto& a : rho.atoms) sum += a.w / (a.m * a.m + p_norm * p_norm);
  return sum / pi;
}

double theta_t(const MassMeasure& rho, double t, double pbar_norm) {
  rho.validate();
  const double at = std::abs(t);
  if (rho.kind == MassMeasure::Kind::Atomic) {
    double sum = 0.0;
    for (const auto& a : rho.atoms) {
      const double omega = std::hypot(a.m, pbar_norm);
      sum += a.w * std::exp(-at * omega) / omega;
    }
    return sum;
  }
  // int m^{s-1} e^{-|t| omega} / omega dm: converges at 0 when pbar > 0 or
  // s > 1, at infinity when t > 0 or s < 1.
  const double s = rho.s;
  require(pbar_norm > 0.0 || s > 1.0, Errc::NotTame, "Theta_t diverges at small mass");
  require(at > 0.0 || s < 1.0, Errc::NotTame, "Theta_t diverges at large mass");
  const double low_rate = pbar_norm > 0.0 ? s : s - 1.0;
  const double lo = (pbar_norm > 0.0 ? std::min(std::log(pbar_norm), 0.0) : 0.0) - 42.0 / low_rate;
  const double hi = at > 0.0 ? std::log(std::max(1.0, 45.0 / at)) + 2.0 : 42.0 / (1.0 - s);
  return log_mass_integral(
      [&](double u) {
        const double m = std::exp(u);
        const double omega = std::hypot(m, pbar_norm);
        return std::exp(s * u) * std::exp(-at * omega) / omega;
      },
      lo, hi);
}

ThetaTCheck theta_t_check(const MassMeasure& rho, double t, double pbar_norm) {
  rho.validate();
  require(rho.kind == MassMeasure::Kind::Atomic, Errc::DomainViolation,
          "the p0 cross-check is for atomic measures");
  ThetaTCheck out;
  out.formula = theta_t(rho, t, pbar_norm);
  for (const auto& a : rho.atoms) {
    const double omega = std::hypot(a.m, pbar_norm);
    // (1/pi) / (omega^2 + p0^2) = (1/omega) * Lorentzian of half-width omega.
    out.quadrature += a.w * lorentzian_fourier(omega, t).value / omega;
  }
  out.rel_error = std::abs(out.quadrature - out.formula) / std::abs(out.formula);
  return out;
}

double multiplicativity_defect(const MassMeasure& rho, double t, double s, double pbar_norm) {
  const double base = theta_t(rho, 0.0, pbar_norm);
  const auto r = [&](double x) { return theta_t(rho, x, pbar_norm) / base; };
  return std::abs(r(t + s) - r(t) * r(s));
}

double schwinger_d3_constant() {
  static std::once_flag once;
  static double constant = 0.0;
  std::call_once(once, [] {
    // g(x) = e^{-|x|^2/2}, g_hat(p) = (2 pi)^{3/2} e^{-|p|^2/2}, m = 1.
    const auto lhs = integrate([](double r) { return std::exp(-r) * r * std::exp(-r * r / 2) * 4 * pi; },
                               0.0, 40.0, 80, 24);
    const auto rhs = integrate(
        [](double p) {
          return (1.0 / pi) / (1.0 + p * p) * std::pow(2 * pi, 1.5) * std::exp(-p * p / 2) * 4 * pi * p * p;
        },
        0.0, 40.0, 80, 24);
    constant = rhs / lhs;
  });
  return constant;
}

double power_schwinger_quadrature(double s, double r) {
  MassMeasure::power_law(s).validate();
  require(r > 0.0, Errc::OriginSingularity, "nu_hat is singular at the origin");
  // int m^{s-1} K e^{-m r} / r dm with m = e^u.
  const double c = -std::log(r);
  const double lo = c - 42.0 / s;
  const double hi = c + std::log(45.0) + 2.0;
  return schwinger_d3_constant() / r *
         log_mass_integral([&](double u) { return std::exp(s * u - std::exp(u) * r); }, lo, hi);
}

double schwinger_2pt(const MassMeasure& rho, int d, const VectorXd& x) {
  rho.validate();
  require(d == 1 || d == 3, Errc::DomainViolation, "closed forms exist for d = 1 and d = 3");
  require(x.size() == d, Errc::DomainViolation, "point dimension mismatch");
  const double r = x.norm();
  if (rho.kind == MassMeasure::Kind::PowerLaw) {
    require(d == 3, Errc::NotTame, "power-law two-point function is only modelled in d = 3");
    require(r > 0.0, Errc::OriginSingularity, "nu_hat is singular at the origin");
    return schwinger_d3_constant() * gamma(rho.s) * std::pow(r, -1.0 - rho.s);
  }
  double sum = 0.0;
  if (d == 1) {
    for (const auto& a : rho.atoms) sum += a.w * std::exp(-a.m * r) / a.m;
    return sum;
  }
  require(r > 0.0, Errc::OriginSingularity, "nu_hat is singular at the origin in d = 3");
  for (const auto& a : rho.atoms) sum += a.w * std::exp(-a.m * r);
  return schwinger_d3_constant() * sum / r;
}

double ode_residual(double m, double x, double step) {
  require(x != 0.0 && std::abs(x) > 2 * step, Errc::OriginSingularity, "stencil crosses the origin");
  const MassMeasure rho = MassMeasure::atomic({{m, 1.0}});
  const auto f = [&](double y) { return schwinger_2pt(rho, 1, VectorXd::Constant(1, y)); };
  const double second = (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
  return std::abs(m * m * f(x) - second);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, Errc::DomainViolation, "need matching samples");
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

MatrixXd halfspace_gram(const MassMeasure& rho, int d, const MatrixXd& points) {
  require(points.rows() == d, Errc::DomainViolation, "point dimension mismatch");
  const Index n = points.cols();
  for (Index j = 0; j < n; ++j)
    require(points(0, j) > 0.0, Errc::DomainViolation, "points must satisfy x0 > 0");
  MatrixXd g(n, n);
  for (Index i = 0; i < n; ++i) {
    VectorXd reflected = points.col(i);
    reflected(0) = -reflected(0);
    for (Index j = 0; j < n; ++j) g(i, j) = schwinger_2pt(rho, d, reflected - points.col(j));
  }
  return g;
}

GramReport halfspace_rp_check(const MassMeasure& rho, int d, const MatrixXd& points, double tol) {
  return psd_verdict(halfspace_gram(rho, d, points), tol);
}

}  // namespace oskit::freefield
