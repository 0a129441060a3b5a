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

#include "oskit/sphere.hpp"

#include <cmath>
#include <numbers>

#include "oskit/quadrature.hpp"
#include "oskit/rng.hpp"

namespace oskit::sphere {

using std::numbers::pi;

MatrixXd lorentz_metric(int n) {
  MatrixXd eta = -MatrixXd::Identity(n + 2, n + 2);
  eta(0, 0) = 1.0;
  return eta;
}

void validate_conformal(const MatrixXd& g) {
  require(g.rows() == g.cols() && g.rows() >= 3, Errc::DomainViolation,
          "conformal element must be square of size n + 2");
  const MatrixXd eta = lorentz_metric(static_cast<int>(g.rows()) - 2);
  const double defect = (g.transpose() * eta * g - eta).norm();
  require(defect <= 1e-10 * std::max(1.0, g.squaredNorm()), Errc::DomainViolation,
          "element does not preserve the Lorentz form (defect " + std::to_string(defect) + ")");
  require(g(0, 0) > 0.0, Errc::DomainViolation, "element reverses time orientation");
}

MatrixXd boost(int n, int axis, double rapidity) {
  require(axis >= 1 && axis <= n + 1, Errc::DomainViolation, "boost axis out of range");
  MatrixXd g = MatrixXd::Identity(n + 2, n + 2);
  g(0, 0) = g(axis, axis) = std::cosh(rapidity);
  g(0, axis) = g(axis, 0) = std::sinh(rapidity);
  return g;
}

MatrixXd rotation(const MatrixXd& r) {
  MatrixXd g = MatrixXd::Identity(r.rows() + 1, r.cols() + 1);
  g.bottomRightCorner(r.rows(), r.cols()) = r;
  return g;
}

Action conformal_action(const MatrixXd& g, const VectorXd& x) {
  require(g.rows() == x.size() + 1, Errc::DomainViolation, "dimension mismatch");
  require(std::abs(x.norm() - 1.0) <= 1e-12, Errc::DomainViolation, "point is not on the sphere");
  const Index m = x.size();
  const double j = g(0, 0) + g.row(0).tail(m).dot(x);
  require(std::abs(j) > 1e-14, Errc::SingularPoint, "J(g, x) vanishes");
  VectorXd gx = (g.col(0).tail(m) + g.bottomRightCorner(m, m) * x) / j;
  return {std::move(gx), j};
}

double weight_factor(const MatrixXd& g, const VectorXd& x, double lambda, int n) {
  return std::pow(conformal_action(g, x).jacobian, lambda - 0.5 * n);
}

VectorXd stereographic(const VectorXd& x) {
  const double r2 = x.squaredNorm();
  VectorXd y(x.size() + 1);
  y(0) = (1.0 - r2) / (1.0 + r2);
  y.tail(x.size()) = 2.0 * x / (1.0 + r2);
  return y;
}

VectorXd stereographic_inverse(const VectorXd& y) {
  require(1.0 + y(0) > 1e-14, Errc::Antipode, "inverse stereographic projection at -e0");
  return y.tail(y.size() - 1) / (1.0 + y(0));
}

VectorXd inversion(const VectorXd& x) {
  const double r2 = x.squaredNorm();
  require(r2 > 0.0, Errc::SingularPoint, "inversion at the origin");
  return x / r2;
}

double q_kernel(double lambda, int n, const VectorXd& u, const VectorXd& v) {
  const double q = 1.0 - u.dot(v);
  const double exponent = lambda - 0.5 * n;
  if (exponent < 0.0) require(q > 1e-14, Errc::CoincidentPoints, "Q kernel singular at u = v");
  if (exponent == 0.0) return 1.0;
  return std::pow(std::max(q, 0.0), exponent);
}

double r_kernel(double lambda, int n, const VectorXd& x, const VectorXd& y, RVariant variant) {
  require(x.squaredNorm() < 1.0 && y.squaredNorm() < 1.0, Errc::OutOfBall,
          "R kernel needs points in the open unit ball");
  const double cross = variant == RVariant::Factor2 ? 2.0 : 1.0;
  const double base = 1.0 - cross * x.dot(y) + x.squaredNorm() * y.squaredNorm();
  return std::pow(base, lambda - 0.5 * n);
}

cplx lambda_of_mass(double m, int n) {
  require(m > 0.0 && n >= 1, Errc::DomainViolation, "mass must be positive");
  const double h = 0.5 * (n - 1);
  const double disc = h * h - m * m;
  return disc >= 0.0 ? cplx(std::sqrt(disc), 0.0) : cplx(0.0, std::sqrt(-disc));
}

HypParams psi_params(double m, int n) {
  const cplx lam = lambda_of_mass(m, n);
  const double h = 0.5 * (n - 1);
  return {h + lam, h - lam, cplx(0.5 * n, 0.0)};
}

cplx psi_kernel(double m, int n, const VectorXd& x, const VectorXd& y) {
  require(x.size() == n + 1 && y.size() == n + 1, Errc::DomainViolation, "dimension mismatch");
  require(x(0) >= -1e-14 && y(0) >= -1e-14, Errc::DomainViolation,
          "points must lie on the closed upper half-sphere");
  const double pairing = x(0) * y(0) - x.tail(n).dot(y.tail(n));
  return hyp2f1(psi_params(m, n), 0.5 * (1.0 - pairing));
}

SphereConstants sphere_constants(double lambda, int n) {
  require(lambda > 0.0, Errc::Nonintegrable, "d_{lambda,n} needs lambda > 0");
  require(n >= 1, Errc::DomainViolation, "n must be positive");
  SphereConstants out;
  const double hn = 0.5 * n;
  out.c_n = gamma(0.5 * (n + 1)) / (std::sqrt(pi) * gamma(hn));
  out.d_lambda_n = std::pow(2.0, lambda + hn - 1.0) * gamma(0.5 * (n + 1)) * gamma(lambda) /
                   (std::sqrt(pi) * gamma(lambda + hn));

  // Integrand (1-r)^{lambda-1}(1+r)^{n/2-1}. On [-1, 0] put 1 + r = s^2, on
  // [0, 1] put 1 - r = s^p with p * lambda integral so both ends are smooth.
  constexpr int panels = 32, order = 32;
  const double p = std::ceil(lambda) / lambda;
  const auto left = [&](double s) {
    const double r = s * s - 1.0;
    return std::pow(1.0 - r, lambda - 1.0) * std::pow(s, n - 1) * 2.0;
  };
  const auto right = [&](double s) {
    const double r = 1.0 - std::pow(s, p);
    return p * std::pow(s, std::ceil(lambda) - 1.0) * std::pow(1.0 + r, hn - 1.0);
  };
  const double integral =
      integrate(left, 0.0, 1.0, panels, order) + integrate(right, 0.0, 1.0, panels, order);
  out.nodes = 2L * panels * order;
  out.quadrature = out.c_n * integral;
  out.quadrature_residual = std::abs(out.quadrature - out.d_lambda_n) / out.d_lambda_n;

  for (double z : {0.7, 1.3, 2.5}) {
    const double lhs = std::sqrt(pi) * gamma(2.0 * z);
    const double rhs = std::pow(2.0, 2.0 * z - 1.0) * gamma(z) * gamma(z + 0.5);
    out.duplication_residual = std::max(out.duplication_residual, std::abs(lhs - rhs) / std::abs(lhs));
  }

  // B(lambda, n/2) = int_0^1 t^{lambda-1}(1-t)^{n/2-1} dt, same substitutions
  // after folding at 1/2.
  const double q = std::ceil(hn) / hn;
  const auto b_left = [&](double s) {
    const double t = std::pow(s, p);
    return p * std::pow(s, std::ceil(lambda) - 1.0) * std::pow(1.0 - t, hn - 1.0);
  };
  const auto b_right = [&](double s) {
    const double t = 1.0 - std::pow(s, q);
    return q * std::pow(s, std::ceil(hn) - 1.0) * std::pow(t, lambda - 1.0);
  };
  const double beta_quad = integrate(b_left, 0.0, std::pow(0.5, 1.0 / p), panels, order) +
                           integrate(b_right, 0.0, std::pow(0.5, 1.0 / q), panels, order);
  const double beta_closed = gamma(lambda) * gamma(hn) / gamma(lambda + hn);
  out.beta_residual = std::abs(beta_quad - beta_closed) / beta_closed;
  return out;
}

MatrixXd spread_directions(int dim, int count, std::uint64_t seed, int iterations) {
  RngStream rng(seed, 0x73706864);
  MatrixXd x(dim, count);
  for (int j = 0; j < count; ++j) {
    for (int i = 0; i < dim; ++i) x(i, j) = rng.normal();
    x.col(j).normalize();
  }
  if (count < 2) return x;
  MatrixXd force(dim, count);
  for (int it = 0; it < iterations; ++it) {
    force.setZero();
    for (int a = 0; a < count; ++a)
      for (int b = 0; b < count; ++b) {
        if (a == b) continue;
        const VectorXd diff = x.col(a) - x.col(b);
        const double d2 = diff.squaredNorm();
        force.col(a) += diff / (d2 * std::sqrt(d2));
      }
    x += 0.01 * force;
    x.colwise().normalize();
  }
  return x;
}

MatrixXd ball_points(int n, double radius, std::uint64_t seed) {
  require(n >= 1 && radius > 0.0 && radius < 1.0, Errc::OutOfBall, "radius must lie in (0, 1)");
  MatrixXd pts = MatrixXd::Zero(n, 40);
  pts.middleCols(1, 13) = 0.5 * radius * spread_directions(n, 13, seed);
  pts.rightCols(26) = radius * spread_directions(n, 26, seed + 1);
  return pts;
}

MatrixXd halfsphere_points(int n, int count, double min_x0, std::uint64_t seed) {
  require(n >= 1 && count >= 1, Errc::DomainViolation, "need n >= 1 and count >= 1");
  const int pool = 4 * count;
  MatrixXd cand;
  if (n == 2) {
    cand.resize(3, pool);
    const double golden = pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < pool; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / pool;
      const double r = std::sqrt(1.0 - z * z);
      cand.col(i) << z, r * std::cos(i * golden), r * std::sin(i * golden);
    }
  } else {
    cand = spread_directions(n + 1, pool, seed);
  }
  std::vector<Index> keep;
  for (Index j = 0; j < cand.cols(); ++j)
    if (cand(0, j) > min_x0) keep.push_back(j);
  require(static_cast<int>(keep.size()) >= count, Errc::DomainViolation,
          "not enough sphere points above the margin");
  MatrixXd out(n + 1, count);
  for (int k = 0; k < count; ++k) {
    const auto idx = count == 1 ? 0 : static_cast<std::size_t>(k * (keep.size() - 1) / (count - 1));
    out.col(k) = cand.col(keep[idx]);
  }
  return out;
}

double min_pairwise_angle(const MatrixXd& unit_columns) {
  double best = pi;
  for (Index a = 0; a < unit_columns.cols(); ++a)
    for (Index b = a + 1; b < unit_columns.cols(); ++b) {
      const double c = std::clamp(unit_columns.col(a).dot(unit_columns.col(b)), -1.0, 1.0);
      best = std::min(best, std::acos(c));
    }
  return best;
}

}  // namespace oskit::sphere
