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

#include <string_view>
#include <vector>

#include "oskit/measure.hpp"
#include "oskit/sphere.hpp"

// Closed-form kernel catalog, Gram assembly and reflected Grams. Points are
// stored one per column.
namespace oskit {

enum class KernelFamily { ExpLine, PeriodicGreen, PowerLaw, SphereQ, SphereR, HypPsi, Custom };

std::string_view family_name(KernelFamily f);

struct KernelSpec {
  KernelFamily family = KernelFamily::ExpLine;
  double lambda = 0.0;
  double beta = 1.0;
  double exponent = 0.0;  // a for POWER_LAW
  double mass = 0.0;      // m for HYP_PSI
  int dim = 1;            // d for POWER_LAW, n for the sphere families
  sphere::RVariant variant = sphere::RVariant::Factor2;
  MatC samples;  // CUSTOM: exact table K(x_i, x_j)

  static KernelSpec exp_line(double lambda);
  static KernelSpec periodic_green(double lambda, double beta);
  static KernelSpec power_law(double a, int d);
  static KernelSpec sphere_q(double lambda, int n);
  static KernelSpec sphere_r(double lambda, int n,
                             sphere::RVariant variant = sphere::RVariant::Factor2);
  static KernelSpec hyp_psi(double m, int n);
  static KernelSpec custom(MatC table);

  // Throws DomainViolation when parameters leave the family's domain.
  void validate() const;
  // Dimension of the points the kernel accepts.
  int point_dim() const;
};

cplx evaluate(const KernelSpec& k, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// e^{-lambda x} + e^{-lambda (beta - x)} on [0, beta], extended beta-periodically.
double periodic_green(double lambda, double beta, double x);

enum class GeometryTag { Line, Interval, Circle, Halfspace, Halfball };

struct ReflectionGeometry {
  GeometryTag tag = GeometryTag::Line;
  double a = 1.0;     // Interval half-width
  double beta = 1.0;  // Circle period
  int dim = 1;        // Halfspace d; Halfball works on S^n in R^{n+1}

  static ReflectionGeometry line() { return {}; }
  static ReflectionGeometry interval(double a) { return {GeometryTag::Interval, a, 1.0, 1}; }
  static ReflectionGeometry circle(double beta) { return {GeometryTag::Circle, 1.0, beta, 1}; }
  static ReflectionGeometry halfspace(int d) { return {GeometryTag::Halfspace, 1.0, 1.0, d}; }
  static ReflectionGeometry halfball(int n) { return {GeometryTag::Halfball, 1.0, 1.0, n + 1}; }

  Eigen::VectorXd tau(const Eigen::VectorXd& x) const;
  bool in_plus(const Eigen::VectorXd& x) const;
};

std::string_view geometry_name(GeometryTag g);

// Largest |tau(tau x) - x| over the columns and whether tau moves every
// positive-region sample out of the positive region.
struct GeometryCheck {
  double involution_residual = 0.0;
  bool tau_leaves_plus = true;
};
GeometryCheck check_geometry(const ReflectionGeometry& g, const Eigen::MatrixXd& points);

MatC gram(const KernelSpec& k, const Eigen::MatrixXd& points);

// K(x_i, tau x_j) for points in the positive region.
MatC reflected_gram(const KernelSpec& k, const ReflectionGeometry& g, const Eigen::MatrixXd& points);

struct FourierCoefficients {
  std::vector<int> n;
  std::vector<double> closed_form;
  std::vector<double> quadrature;
  double max_rel_error = 0.0;
  double min_coefficient = 0.0;
  long nodes = 0;
};

// c_n = (1/beta) int_0^beta phi(x) e^{-2 pi i n x / beta} dx, |n| <= n_max.
FourierCoefficients periodic_fourier_coefficients(double lambda, double beta, int n_max);

struct IntervalReport {
  GramReport group_kernel;      // phi((t - s)/2), t, s in (-a, a)
  GramReport semigroup_kernel;  // phi((t + s)/2), t, s in (0, a)
  double widder_slope = 0.0;    // left derivative of L(mu) at a
  bool slope_predicts_rp = false;
  bool prediction_consistent = true;
};

// Chebyshev nodes of (lo, hi).
Eigen::VectorXd chebyshev_nodes(double lo, double hi, int count);

// phi(t) = sum_j w_j e^{-lambda_j |t|}, scalar weights, locations of any sign.
IntervalReport interval_rp_check(const SpectralMeasure& mu, double a, int grid_size = 24,
                                 double tol = 1e-8);

}  // namespace oskit
