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

#include "oskit/linalg.hpp"

namespace oskit {

// Finite-dimensional reflection-positive space: ambient C^d, unitary
// involution theta, and a basis of the positive subspace E+ as columns.
class RPSpace {
 public:
  // Validates unitarity, theta^2 = 1 and full column rank of the basis.
  RPSpace(MatC theta, MatC plus_basis);

  Index dim() const { return theta_.rows(); }
  Index k() const { return plus_basis_.cols(); }
  const MatC& theta() const { return theta_; }
  const MatC& plus_basis() const { return plus_basis_; }

 private:
  MatC theta_;
  MatC plus_basis_;
};

struct ThetaEigenspaces {
  MatC plus;   // orthonormal basis of Fix(theta)
  MatC minus;  // orthonormal basis of the -1 eigenspace
};

ThetaEigenspaces theta_eigenspaces(const MatC& theta);

// G_ij = <b_i, theta b_j>.
MatC twisted_gram(const RPSpace& space);

GramReport check_reflection_positive(const RPSpace& space, double tol = 1e-9);

struct GraphSubspace {
  MatC plus_basis;          // columns f_j + C f_j
  double contraction_norm;  // operator norm of C on span(f)
  bool theta_positive;      // contraction_norm <= 1
};

// f_basis: columns in Fix(theta); c_images: column j is C f_j, in the -1 eigenspace.
GraphSubspace graph_subspace(const MatC& theta, const MatC& f_basis, const MatC& c_images);

struct OSQuotient {
  Index rank = 0;
  MatC qmap;        // r x k; <q x, q y> = x* G y
  MatC lift;        // k x r; lift* G lift = 1, qmap * lift = 1
  MatC null_basis;  // k x (k - r), twisted norms below tol * max(max_eig, ||B||^2)
  double tol = 0.0;
};

OSQuotient os_quotient(const RPSpace& space, double tol = 1e-9);

// S acts on E+ coordinates; returns the r x r induced operator on the quotient.
MatC os_transform(const RPSpace& space, const OSQuotient& quotient, const MatC& s);

// Operator norm of S on E+ measured in the ambient metric.
double restricted_norm(const RPSpace& space, const MatC& s);

// Relative defect of <Sx, y>_theta = <x, Sy>_theta.
double theta_symmetry_defect(const RPSpace& space, const MatC& s);

struct MarkovReport {
  double projector_residual = 0.0;  // ||P+ P0 P- - P+ P-||
  Index quotient_defect = 0;        // dim of quotient minus rank of q on E0
  bool projector_holds = false;
  bool is_markov = false;
  bool criteria_agree = false;
};

// e0_basis: theta-fixed vectors of E+ (ambient coordinates).
MarkovReport markov_check(const RPSpace& space, const MatC& e0_basis, double tol = 1e-9);

}  // namespace oskit
