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

#include <Eigen/Dense>
#include <cstdint>

#include "oskit/linalg.hpp"
#include "oskit/special.hpp"

// Conformal geometry of S^n, the ball model and the kernel family built on
// Q(u, v) = 1 - <u, v>. Sphere points live in R^{n+1}, ball points in R^n.
namespace oskit::sphere {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// diag(1, -1, ..., -1) of size n + 2.
MatrixXd lorentz_metric(int n);

// Checks g^T eta g = eta to 1e-10 and g_00 > 0; throws DomainViolation.
void validate_conformal(const MatrixXd& g);

// Hyperbolic rotation in the (0, axis) plane, axis in [1, n+1].
MatrixXd boost(int n, int axis, double rapidity);
// diag(1, r) for r in O(n+1); acts with J = 1.
MatrixXd rotation(const MatrixXd& r);

struct Action {
  VectorXd point;
  double jacobian;  // J(g, x) = a + <b, x>
};

Action conformal_action(const MatrixXd& g, const VectorXd& x);

// J_{-lambda}(g, x) = J(g, x)^{lambda - n/2}.
double weight_factor(const MatrixXd& g, const VectorXd& x, double lambda, int n);

VectorXd stereographic(const VectorXd& x);
VectorXd stereographic_inverse(const VectorXd& y);
// x / |x|^2, the ball image of the reflection in the equator.
VectorXd inversion(const VectorXd& x);

double q_kernel(double lambda, int n, const VectorXd& u, const VectorXd& v);

enum class RVariant { Factor2, NoFactor2 };

// (1 - 2<x,y> + |x|^2|y|^2)^{lambda - n/2}; NoFactor2 drops the 2.
double r_kernel(double lambda, int n, const VectorXd& x, const VectorXd& y,
                RVariant variant = RVariant::Factor2);

// sqrt(((n-1)/2)^2 - m^2), purely imaginary once m > (n-1)/2.
cplx lambda_of_mass(double m, int n);

HypParams psi_params(double m, int n);

// 2F1(a, b; n/2; (1 - x0 y0 + <xbar, ybar>)/2) on the closed upper half-sphere.
cplx psi_kernel(double m, int n, const VectorXd& x, const VectorXd& y);

struct SphereConstants {
  double c_n = 0.0;
  double d_lambda_n = 0.0;
  double quadrature = 0.0;        // c_n * int (1-r)^{lambda-n/2} (1-r^2)^{n/2-1} dr
  double quadrature_residual = 0.0;
  double duplication_residual = 0.0;  // worst of z in {0.7, 1.3, 2.5}
  double beta_residual = 0.0;         // B(lambda, n/2) by quadrature vs Gamma
  long nodes = 0;
};

SphereConstants sphere_constants(double lambda, int n);

// Columns are points. Centre, 13 directions at radius/2 and 26 at radius,
// directions spread by repulsion.
MatrixXd ball_points(int n, double radius = 0.8, std::uint64_t seed = 3);

// Points of S^n with x0 > min_x0: Fibonacci lattice for n = 2, repelled
// random points otherwise. Evenly thinned to `count` columns.
MatrixXd halfsphere_points(int n, int count, double min_x0 = 0.1, std::uint64_t seed = 0);

// Quasi-uniform unit vectors in R^dim (columns).
MatrixXd spread_directions(int dim, int count, std::uint64_t seed, int iterations = 300);

double min_pairwise_angle(const MatrixXd& unit_columns);

}  // namespace oskit::sphere
