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

#include <vector>

#include "oskit/linalg.hpp"

// Euclidean two-point functions from mass measures, with the density
// convention d nu_m(p) = (1/pi) dp / (m^2 + p^2).
namespace oskit::freefield {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct MassAtom {
  double m = 1.0;
  double w = 1.0;
};

struct MassMeasure {
  enum class Kind { Atomic, PowerLaw };
  Kind kind = Kind::Atomic;
  std::vector<MassAtom> atoms;
  double s = 1.0;  // d rho(m) = m^{s-1} dm

  static MassMeasure atomic(std::vector<MassAtom> atoms);
  static MassMeasure power_law(double s);

  // Throws NotTame for power laws outside 0 < s < 2 and DomainViolation for
  // nonpositive masses or negative weights.
  void validate() const;
};

// Theta(p) = (1/pi) int d rho(m) / (m^2 + |p|^2).
double theta_density(const MassMeasure& rho, double p_norm);

// Theta_s(1) by quadrature over log m; computed once per s.
double power_theta_constant(double s);

// Same quadrature at an arbitrary |p|, for exponent checks.
double power_theta_quadrature(double s, double p_norm);

// Fourier transform in p0: sum_j w_j e^{-|t| w_j} / omega_j,
// omega_j = sqrt(m_j^2 + |pbar|^2). Power laws go through quadrature in m.
double theta_t(const MassMeasure& rho, double t, double pbar_norm);

struct ThetaTCheck {
  double formula = 0.0;
  double quadrature = 0.0;
  double rel_error = 0.0;
};
// Compares theta_t with int e^{-i t p0} Theta(p0, pbar) dp0 (atomic only).
ThetaTCheck theta_t_check(const MassMeasure& rho, double t, double pbar_norm);

// |r(t + s) - r(t) r(s)| with r(t) = Theta_t / Theta_0.
double multiplicativity_defect(const MassMeasure& rho, double t, double s, double pbar_norm);

// 2 pi from matching int nu_hat g = int Theta g_hat for a Gaussian g.
double schwinger_d3_constant();

// nu_hat(x) in d = 1 or 3; power laws only in d = 3.
double schwinger_2pt(const MassMeasure& rho, int d, const VectorXd& x);

// nu_hat of a power law at radius r by quadrature over m (d = 3).
double power_schwinger_quadrature(double s, double r);

// |(m^2 - d^2/dx^2) nu_hat| at x != 0 by central differences, single atom.
double ode_residual(double m, double x, double step = 1e-3);

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Gram of nu_hat(tau x_i - x_j) for points (columns) with x0 > 0.
MatrixXd halfspace_gram(const MassMeasure& rho, int d, const MatrixXd& points);
GramReport halfspace_rp_check(const MassMeasure& rho, int d, const MatrixXd& points,
                              double tol = 1e-8);

}  // namespace oskit::freefield
