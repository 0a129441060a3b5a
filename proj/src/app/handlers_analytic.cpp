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

// Scenario handlers for sphere and freefield.
#include <algorithm>
#include <cmath>
#include <numbers>

#include "app/handlers.hpp"
#include "oskit/freefield.hpp"
#include "oskit/instances.hpp"
#include "oskit/rng.hpp"
#include "oskit/sphere.hpp"

namespace oskit::app {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// ---- sphere ----

void hyp2f1_paths(Context& ctx) {
  const json& p = ctx.payload();
  HypParams hp;
  if (has(p, "mass")) {
    hp = sphere::psi_params(num(p, "mass"), integer(p, "n"));
  } else {
    hp = {complex_value(field(p, "a")), complex_value(field(p, "b")), complex_value(field(p, "c"))};
  }
  const double lo = num(p, "lo", -5.0), hi = num(p, "hi", 0.95);
  const int count = integer(p, "count", 200);
  double worst = 0.0;
  std::vector<double> values;
  for (int i = 0; i < count; ++i) {
    const double x = lo + (hi - lo) * i / (count - 1);
    const cplx a = hyp2f1(hp, x), b = hyp2f1_alternate(hp, x);
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
    values.push_back(a.real());
  }
  ctx.check("max_path_disagreement", worst, Cmp::Le, ctx.tol("hypergeometric", 1e-10));
  ctx.dump(std::move(values));
  ctx.cite("2F1 via series, Pfaff and connection formulas against Euler's transformation");
}

sphere::RVariant variant_of(const json& p) {
  const std::string v = str(p, "variant", "factor2");
  if (v == "factor2") return sphere::RVariant::Factor2;
  if (v == "paper-def") return sphere::RVariant::NoFactor2;
  schema_error("unknown R variant '" + v + "'");
}

void r_window(Context& ctx) {
  const json& p = ctx.payload();
  const int n = integer(p, "n");
  const double lambda = num(p, "lambda");
  const MatrixXd pts = sphere::ball_points(n, num(p, "radius", 0.8), seed(p, "seed", 3));
  const auto variant = variant_of(p);
  const Index m = pts.cols();
  MatC g(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) g(i, j) = sphere::r_kernel(lambda, n, pts.col(i), pts.col(j), variant);
  const double tol = ctx.tol("psd", 1e-8);
  const bool want = expect_psd(p);
  const GramReport rep = psd_verdict(g, tol);
  if (want)
    ctx.verdict("r_gram", rep, true, tol);
  else
    ctx.check("r_gram_min_eig", rep.relative_min(), Cmp::Lt, -ctx.tol("not_psd_margin", 1e-6));
  ctx.note("points", std::to_string(m));
  ctx.note("variant", str(p, "variant", "factor2"));
  ctx.dump_spectrum(g);
  ctx.cite("R kernel on the unit ball, positive for (n - 1)/2 <= lambda <= n/2");
}

void psi_gram(Context& ctx) {
  const json& p = ctx.payload();
  const int n = integer(p, "n");
  const double mass = num(p, "mass");
  const MatrixXd pts = sphere::halfsphere_points(n, integer(p, "count", 30), num(p, "min_x0", 0.1));
  const Index m = pts.cols();
  MatC g(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) g(i, j) = sphere::psi_kernel(mass, n, pts.col(i), pts.col(j));
  const double tol = ctx.tol("psd", 1e-7);
  ctx.check("hermitian_defect", hermitian_defect(g), Cmp::Le, ctx.tol("hermitian", 1e-12));
  ctx.verdict("psi_gram", psd_verdict(g, tol, 1e-10), expect_psd(p), tol);
  const cplx lam = sphere::lambda_of_mass(mass, n);
  ctx.note("lambda", lam.imag() == 0.0 ? std::to_string(lam.real()) : std::to_string(lam.imag()) + "i");
  ctx.dump_spectrum(g);
  ctx.cite("Psi_m(x, y) = 2F1(h + lambda, h - lambda; n/2; (1 - [x, y])/2), h = (n - 1)/2");
}

void constants(Context& ctx) {
  const json& p = ctx.payload();
  const sphere::SphereConstants c = sphere::sphere_constants(num(p, "lambda"), integer(p, "n"));
  const double tol = ctx.tol("quadrature", 1e-8);
  ctx.check("quadrature_residual", c.quadrature_residual, Cmp::Le, tol);
  ctx.check("duplication_residual", c.duplication_residual, Cmp::Le, ctx.tol("duplication", 1e-12));
  ctx.check("beta_residual", c.beta_residual, Cmp::Le, tol);
  ctx.check("d_lambda_n", c.d_lambda_n, Cmp::Gt, 0.0);
  ctx.note("nodes", std::to_string(c.nodes));
  ctx.cite("c_n int (1 - r)^{lambda - n/2} (1 - r^2)^{n/2 - 1} dr = d_{lambda,n}");
}

VectorXd random_sphere_point(int n, RngStream& rng) {
  VectorXd x(n + 1);
  for (Index i = 0; i <= n; ++i) x(i) = rng.normal();
  return x.normalized();
}

MatrixXd random_group_element(int n, RngStream& rng) {
  MatrixXd g = sphere::rotation(instances::random_orthogonal(n + 1, rng));
  g = sphere::boost(n, 1 + static_cast<int>(rng.below(n + 1)), rng.uniform(-1.5, 1.5)) * g;
  return sphere::rotation(instances::random_orthogonal(n + 1, rng)) * g;
}

void conformal(Context& ctx) {
  const json& p = ctx.payload();
  const int n = integer(p, "n");
  const double lambda = num(p, "lambda", 0.5 * n + 0.3);
  const int trials = integer(p, "trials", 100);
  RngStream rng(seed(p, "seed", 13), 0x636f6e66);
  double cocycle = 0.0, covariance = 0.0, group = 0.0;
  for (int t = 0; t < trials; ++t) {
    const MatrixXd g1 = random_group_element(n, rng), g2 = random_group_element(n, rng);
    sphere::validate_conformal(g1);
    group = std::max(group, (g1.transpose() * sphere::lorentz_metric(n) * g1 - sphere::lorentz_metric(n)).norm());
    const VectorXd x = random_sphere_point(n, rng), y = random_sphere_point(n, rng);
    const auto a2 = sphere::conformal_action(g2, x);
    const auto a12 = sphere::conformal_action(g1 * g2, x);
    const auto a1 = sphere::conformal_action(g1, a2.point);
    cocycle = std::max({cocycle, std::abs(a12.jacobian - a1.jacobian * a2.jacobian) / std::abs(a12.jacobian),
                        (a12.point - a1.point).norm()});
    const double q = sphere::q_kernel(lambda, n, x, y);
    const double moved = sphere::q_kernel(lambda, n, sphere::conformal_action(g1, x).point,
                                          sphere::conformal_action(g1, y).point);
    const double rhs = moved * sphere::weight_factor(g1, x, lambda, n) * sphere::weight_factor(g1, y, lambda, n);
    covariance = std::max(covariance, std::abs(rhs - q) / std::max(1e-300, std::abs(q)));
  }
  const double tol = ctx.tol("conformal", 1e-9);
  ctx.check("lorentz_defect", group, Cmp::Le, tol);
  ctx.check("cocycle_residual", cocycle, Cmp::Le, tol);
  ctx.check("q_covariance_residual", covariance, Cmp::Le, tol);
  ctx.cite("J(g1 g2, x) = J(g1, g2 x) J(g2, x)");
  ctx.cite("Q(gx, gy) J(g, x)^{lambda - n/2} J(g, y)^{lambda - n/2} = Q(x, y)");
}

void stereographic(Context& ctx) {
  const json& p = ctx.payload();
  const int n = integer(p, "n");
  const int trials = integer(p, "trials", 100);
  RngStream rng(seed(p, "seed", 17), 0x73746572);
  double roundtrip = 0.0, on_sphere = 0.0, reflection = 0.0;
  for (int t = 0; t < trials; ++t) {
    VectorXd x(n);
    for (Index i = 0; i < n; ++i) x(i) = rng.normal();
    const VectorXd y = sphere::stereographic(x);
    on_sphere = std::max(on_sphere, std::abs(y.norm() - 1.0));
    roundtrip = std::max(roundtrip, (sphere::stereographic_inverse(y) - x).norm() / std::max(1.0, x.norm()));
    VectorXd flipped = y;
    flipped(0) = -flipped(0);
    reflection = std::max(reflection, (sphere::stereographic(sphere::inversion(x)) - flipped).norm());
  }
  const double tol = ctx.tol("stereographic", 1e-12);
  ctx.check("on_sphere_residual", on_sphere, Cmp::Le, tol);
  ctx.check("roundtrip_residual", roundtrip, Cmp::Le, tol);
  ctx.check("inversion_reflection_residual", reflection, Cmp::Le, tol);
  ctx.cite("inversion in the unit sphere corresponds to x0 -> -x0");
}

// ---- freefield ----

void theta_t(Context& ctx) {
  const json& p = ctx.payload();
  const freefield::MassMeasure rho = mass_measure(field(p, "measure"));
  double worst = 0.0, symmetry = 0.0;
  for (double t : num_list(p, "times"))
    for (double pb : num_list(p, "pbar")) {
      const auto c = freefield::theta_t_check(rho, t, pb);
      worst = std::max(worst, c.rel_error);
      symmetry = std::max(symmetry, std::abs(freefield::theta_t(rho, -t, pb) - c.formula));
    }
  ctx.check("max_rel_error", worst, Cmp::Le, ctx.tol("theta_t", 1e-7));
  ctx.check("time_symmetry", symmetry, Cmp::Le, 0.0);
  ctx.note("convention", "Theta_t = sum w e^{-|t| omega} / omega, omega = sqrt(m^2 + |pbar|^2)");
  ctx.cite("int e^{i t p0} Theta(p0, pbar) dp0 = int e^{-|t| omega} / omega d rho(m)");
}

void ode(Context& ctx) {
  const json& p = ctx.payload();
  const double m = num(p, "mass");
  double worst = 0.0;
  for (double x : num_list(p, "points")) {
    const double scale = std::exp(-m * std::abs(x)) * m;
    worst = std::max(worst, freefield::ode_residual(m, x) / scale);
  }
  ctx.check("max_rel_residual", worst, Cmp::Le, ctx.tol("ode", 1e-6));
  ctx.cite("(m^2 - d^2/dx^2) e^{-m|x|}/m = 0 away from the origin");
}

void halfspace(Context& ctx) {
  const json& p = ctx.payload();
  const freefield::MassMeasure rho = mass_measure(field(p, "measure"));
  const int d = integer(p, "d", 3);
  const MatrixXd pts = points(p, d);
  const double tol = ctx.tol("psd", 1e-8);
  const MatrixXd g = freefield::halfspace_gram(rho, d, pts);
  ctx.verdict("reflected_gram", psd_verdict(g, tol), true, tol);
  ctx.dump_spectrum(g.cast<cplx>());
  ctx.cite("nu_hat(theta x - y) is positive definite on x0 > 0");
}

void power_slopes(Context& ctx) {
  const json& p = ctx.payload();
  const double s = num(p, "s");
  const freefield::MassMeasure rho = freefield::MassMeasure::power_law(s);
  std::vector<double> r, two_pt, pn, dens;
  double quad = 0.0;
  for (int i = 0; i <= 12; ++i) {
    const double x = std::pow(10.0, -2.0 + 4.0 * i / 12.0);
    r.push_back(x);
    two_pt.push_back(freefield::schwinger_2pt(rho, 3, VectorXd::Constant(3, x / std::sqrt(3.0))));
    quad = std::max(quad, std::abs(freefield::power_schwinger_quadrature(s, x) - two_pt.back()) / two_pt.back());
    pn.push_back(x);
    dens.push_back(freefield::theta_density(rho, x));
  }
  const double tol = ctx.tol("slope", 1e-3);
  ctx.check("two_point_slope_error", std::abs(freefield::loglog_slope(r, two_pt) + 1.0 + s), Cmp::Le, tol);
  ctx.check("density_slope_error", std::abs(freefield::loglog_slope(pn, dens) - (s - 2.0)), Cmp::Le, tol);
  ctx.check("two_point_quadrature_error", quad, Cmp::Le, ctx.tol("quadrature", 1e-8));
  const double direct = freefield::power_theta_quadrature(s, 1.0);
  const double closed = 1.0 / (2.0 * std::sin(std::numbers::pi * s / 2.0));
  ctx.check("density_constant_error", std::abs(direct - closed) / closed, Cmp::Le, ctx.tol("quadrature", 1e-8));
  ctx.cite("d rho = m^{s-1} dm gives Theta ~ |p|^{s-2}, nu_hat ~ r^{-1-s}");
}

void multiplicativity(Context& ctx) {
  const json& p = ctx.payload();
  const freefield::MassMeasure rho = mass_measure(field(p, "measure"));
  const double pb = num(p, "pbar", 0.5);
  double worst = 0.0;
  for (double t : {0.3, 0.7, 1.5})
    for (double s : {0.2, 1.0}) worst = std::max(worst, freefield::multiplicativity_defect(rho, t, s, pb));
  if (flag(p, "expect_multiplicative", true))
    ctx.check("max_defect", worst, Cmp::Le, ctx.tol("multiplicative", 1e-12));
  else
    ctx.check("max_defect", worst, Cmp::Gt, ctx.tol("non_multiplicative", 1e-3));
  ctx.cite("Theta_t is a semigroup in t iff rho is a single atom");
}

}  // namespace

void register_analytic(HandlerTable& t) {
  t[{"sphere", "hyp2f1_paths"}] = hyp2f1_paths;
  t[{"sphere", "r_window"}] = r_window;
  t[{"sphere", "psi_gram"}] = psi_gram;
  t[{"sphere", "constants"}] = constants;
  t[{"sphere", "conformal"}] = conformal;
  t[{"sphere", "stereographic"}] = stereographic;
  t[{"freefield", "theta_t"}] = theta_t;
  t[{"freefield", "ode"}] = ode;
  t[{"freefield", "halfspace"}] = halfspace;
  t[{"freefield", "power_slopes"}] = power_slopes;
  t[{"freefield", "multiplicativity"}] = multiplicativity;
}

}  // namespace oskit::app
