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

#include "oskit/measure.hpp"

// Hermitian contraction semigroups in a diagonal model, the dilation into
// L^2(R) and the Hardy-space form on the right half-plane.
namespace oskit {

// sum_j e^{-loc_j |t|} W_j for a measure on [0, inf).
MatC rp_function(const SpectralMeasure& q, double t);

struct HermitianSemigroup {
  std::vector<double> eigs;  // generator eigenvalues, all >= 0

  void validate() const;
};

struct PairingResult {
  cplx closed_form;
  cplx quadrature;
  double rel_discrepancy = 0.0;
  long nodes = 0;
  std::vector<Index> skipped;  // components with eigenvalue 0 (no quadrature)
};

// <xi, C_|t| eta> against (1/pi) int conj(j xi) e^{itp} j eta dp,
// j(p) = h^{1/2} / (h + ip).
PairingResult dilation_pairing(const HermitianSemigroup& h, const VecC& xi, const VecC& eta,
                               double t);

struct HardyResult {
  cplx residue_value;
  cplx quadrature_value;
  double rel_discrepancy = 0.0;
  long nodes = 0;
};

// 4 pi sum conj(xi_i) eta_i h_i / ((h_i + z)(h_i + conj w)) and the line
// integral it comes from.
HardyResult hardy_twisted_inner(const HermitianSemigroup& h, cplx z, cplx w, const VecC& xi,
                                const VecC& eta);

class ProjectionModel {
 public:
  explicit ProjectionModel(SpectralMeasure rho);

  // (1/pi) sum_{loc > 0} w loc / (loc^2 + x^2)
  double nu_density(double x) const;
  // Weight of the atom at 0.
  double ergodic_limit() const { return ergodic_limit_; }
  // (1/T) int_0^T phi(t) dt in closed form.
  double cesaro(double horizon) const;
  double cesaro_quadrature(double horizon) const;

 private:
  SpectralMeasure rho_;
  double ergodic_limit_ = 0.0;
};

ProjectionModel spectral_projection_model(const SpectralMeasure& rho);

}  // namespace oskit
