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

namespace oskit::kms {

using Eigen::MatrixXd;

struct PlusAtom {
  double loc = 0.0;  // >= 0
  MatC weight;       // PSD form
};

// mu = mu_+ + e^{beta lambda} mu_+(-lambda): an atom W at loc >= 0 gets a
// partner e^{-beta loc} conj(W) at -loc.
class KMSMeasure {
 public:
  KMSMeasure(double beta, std::vector<PlusAtom> plus_atoms);

  double beta() const { return beta_; }
  Index block() const { return block_; }
  const std::vector<PlusAtom>& plus_atoms() const { return plus_; }
  // Assembled atoms of mu (loc, weight).
  const std::vector<PlusAtom>& atoms() const { return full_; }
  // max |mu(-l) - e^{-beta l} conj mu(l)| over the assembled atoms.
  double modular_residual() const;

 private:
  double beta_;
  Index block_;
  std::vector<PlusAtom> plus_;
  std::vector<PlusAtom> full_;
};

// psi(z) = sum e^{i z loc} W for 0 <= Im z <= beta.
MatC kms_function(const KMSMeasure& mu, cplx z);

// max over t of |psi(i beta + t) - conj psi(t)|.
double kms_residual(const KMSMeasure& mu, const std::vector<double>& times);

struct SkewContraction {
  MatrixXd c;
  MatrixXd complex_structure;  // I, orthogonal on supp C, zero on ker C
  MatrixXd modulus;            // |C| = sqrt(C^T C)
  double norm = 0.0;

  // Throws DomainViolation unless C is square and skew, NotStrictContraction
  // unless |C| < 1.
  static SkewContraction from(const MatrixXd& c);
};

// (1 + iC)^{1 - t/beta} (1 - iC)^{t/beta}, t in [0, beta].
MatC phi_from_contraction(const SkewContraction& c, double beta, double t);

// 2 beta periodic continuation using phi(t + beta) = conj phi(t).
MatC phi_extended(const SkewContraction& c, double beta, double t);

struct ExtensionParts {
  MatrixXd u_plus;   // Re phi
  MatrixXd u_minus;  // -I Im phi
};
ExtensionParts extension_parts(const SkewContraction& c, double beta, double t);

struct ExtensionReport {
  GramReport group_pd;      // f on the doubled grid of R x {e, tau}
  GramReport reflected_pd;  // f(t_i + t_j, tau) on [0, beta/2]
};

// flip_odd replaces u_minus by -u_minus in f.
ExtensionReport rp_extension_check(const SkewContraction& c, double beta,
                                   const std::vector<double>& grid, double tol = 1e-8,
                                   bool flip_odd = false);

// Same two kernels for phi(t) = psi(it) of a KMS measure.
ExtensionReport rp_extension_check(const KMSMeasure& mu, const std::vector<double>& grid,
                                   double tol = 1e-8);

// Uniform grid of `count` points on [0, beta/2], ends included.
std::vector<double> half_period_grid(double beta, int count);

// (e^{-kt} +- e^{-k(beta - t)}) / (1 + e^{-k beta}) on [0, beta], continued
// beta periodically (+) or antiperiodically (-).
double thermal_green(double kappa, double beta, double t, int sign);

struct MatsubaraResult {
  double c_plus = 0.0;
  double c_minus = 0.0;
  std::vector<int> n;
  std::vector<double> closed_form;
  std::vector<cplx> dft;  // extrapolated discrete coefficients
  double fft_check = 0.0;
  double raw_dft_check = 0.0;  // same without extrapolation
  int samples = 0;
};

// Coefficients c_n = (1/2beta) int_0^{2beta} (u+ + u-) e^{-i pi n t/beta} dt.
MatsubaraResult matsubara(double kappa, double beta, int n_max, int samples = 4096);

double matsubara_coefficient(double kappa, double beta, int n);

struct StandardSubspaceModel {
  std::vector<double> delta;  // modular spectrum, positive
  std::vector<int> pairing;   // involution; J x = conj(x) permuted by it
};

struct RoundtripResult {
  SkewContraction contraction;
  MatC basis;  // columns: real-orthonormal basis of V in H
  double im_residual = 0.0;
  double skew_residual = 0.0;
  Index real_rank = 0;  // rank of [V | iV] over R
};

RoundtripResult standard_subspace_roundtrip(const StandardSubspaceModel& model);

// <Delta^{t/(2 beta)} v_i, Delta^{t/(2 beta)} v_j> on the basis.
MatC modular_pairing(const StandardSubspaceModel& model, const MatC& basis, double beta, double t);

}  // namespace oskit::kms
