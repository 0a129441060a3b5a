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

#include "oskit/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oskit/quadrature.hpp"

namespace oskit {

using std::numbers::pi;

MatC rp_function(const SpectralMeasure& q, double t) {
  validate(q);
  require(q.support == Support::NonNeg, Errc::NegativeLocation,
          "reflection positive functions need a measure on [0, inf)");
  MatC phi = MatC::Zero(q.block(), q.block());
  for (const auto& atom : q.atoms) phi += std::exp(-atom.loc * std::abs(t)) * atom.weight;
  return phi;
}

void HermitianSemigroup::validate() const {
  for (double h : eigs)
    require(h >= 0.0 && std::isfinite(h), Errc::DomainViolation, "generator eigenvalues must be >= 0");
}

PairingResult dilation_pairing(const HermitianSemigroup& h, const VecC& xi, const VecC& eta,
                               double t) {
  h.validate();
  const auto n = static_cast<Index>(h.eigs.size());
  require(xi.size() == n && eta.size() == n, Errc::DomainViolation, "vector sizes do not match H");
  PairingResult out{};
  cplx closed_quad_part = 0.0;
  for (Index i = 0; i < n; ++i) {
    const cplx c = std::conj(xi(i)) * eta(i);
    const double hi = h.eigs[i];
    out.closed_form += c * std::exp(-std::abs(t) * hi);
    if (hi == 0.0) {
      out.skipped.push_back(i);
      continue;
    }
    const FourierQuadrature fq = lorentzian_fourier(hi, t);
    out.quadrature += c * fq.value;
    out.nodes += fq.nodes;
    closed_quad_part += c * std::exp(-std::abs(t) * hi);
  }
  out.rel_discrepancy =
      std::abs(out.quadrature - closed_quad_part) / std::max(std::abs(closed_quad_part), 1e-300);
  if (closed_quad_part == 0.0) out.rel_discrepancy = std::abs(out.quadrature);
  return out;
}

namespace {

// int_R (h - ip) / ((h + ip)(z - ip)(wbar - ip)) dp after p = s tan(theta),
// with breakpoints graded around the three near-real features.
std::pair<cplx, long> hardy_line_integral(double h, cplx z, cplx w) {
  const cplx wbar = std::conj(w);
  const auto f = [&](double p) {
    const cplx ip(0.0, p);
    return (h - ip) / ((h + ip) * (z - ip) * (wbar - ip));
  };
  const double s = std::max({h, std::abs(z), std::abs(w)});
  const std::pair<double, double> features[] = {{0.0, h}, {z.imag(), z.real()}, {-w.imag(), w.real()}};
  std::vector<double> thetas{-pi / 2, pi / 2};
  for (const auto& [centre, width] : features)
    for (double m : {-8.0, -4.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0, 8.0})
      thetas.push_back(std::atan((centre + m * width) / s));
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-14; }),
               thetas.end());
  const auto g = [&](double th) {
    const double c = std::cos(th);
    if (std::abs(c) < 1e-300) return cplx(0.0);
    return f(s * std::tan(th)) * (s / (c * c));
  };
  constexpr int panels = 4, order = 32;
  cplx sum = 0.0;
  for (std::size_t k = 0; k + 1 < thetas.size(); ++k)
    sum += integrate(g, thetas[k], thetas[k + 1], panels, order);
  return {sum, static_cast<long>(thetas.size() - 1) * panels * order};
}

}  // namespace

HardyResult hardy_twisted_inner(const HermitianSemigroup& h, cplx z, cplx w, const VecC& xi,
                                const VecC& eta) {
  h.validate();
  require(z.real() > 0.0 && w.real() > 0.0, Errc::NonpositiveRealPart,
          "z and w must lie in the open right half-plane");
  const auto n = static_cast<Index>(h.eigs.size());
  require(xi.size() == n && eta.size() == n, Errc::DomainViolation, "vector sizes do not match H");
  HardyResult out{};
  for (Index i = 0; i < n; ++i) {
    const double hi = h.eigs[i];
    require(hi > 0.0, Errc::DomainViolation, "Hardy form needs strictly positive eigenvalues");
    const cplx c = std::conj(xi(i)) * eta(i);
    out.residue_value += c * 4.0 * pi * hi / ((hi + z) * (hi + std::conj(w)));
    const auto [value, nodes] = hardy_line_integral(hi, z, w);
    out.quadrature_value += c * value;
    out.nodes += nodes;
  }
  out.rel_discrepancy = std::abs(out.quadrature_value - out.residue_value) /
                        std::max(std::abs(out.residue_value), 1e-300);
  return out;
}

ProjectionModel::ProjectionModel(SpectralMeasure rho) : rho_(std::move(rho)) {
  validate(rho_);
  require(rho_.support == Support::NonNeg, Errc::NegativeLocation, "rho must live on [0, inf)");
  require(rho_.block() == 1, Errc::DomainViolation, "projection model takes scalar weights");
  for (const auto& atom : rho_.atoms)
    if (atom.loc == 0.0) ergodic_limit_ += atom.weight(0, 0).real();
}

double ProjectionModel::nu_density(double x) const {
  double s = 0.0;
  for (const auto& atom : rho_.atoms)
    if (atom.loc > 0.0) s += atom.weight(0, 0).real() * atom.loc / (atom.loc * atom.loc + x * x);
  return s / pi;
}

double ProjectionModel::cesaro(double horizon) const {
  require(horizon > 0.0, Errc::DomainViolation, "horizon must be positive");
  double s = 0.0;
  for (const auto& atom : rho_.atoms) {
    const double w = atom.weight(0, 0).real();
    const double x = atom.loc * horizon;
    s += atom.loc == 0.0 ? w : w * -std::expm1(-x) / x;
  }
  return s;
}

double ProjectionModel::cesaro_quadrature(double horizon) const {
  require(horizon > 0.0, Errc::DomainViolation, "horizon must be positive");
  const auto phi = [&](double t) { return rp_function(rho_, t)(0, 0).real(); };
  // Decay scales differ wildly, so split geometrically from the origin.
  std::vector<double> breaks{0.0};
  for (double b = 1e-3; b < horizon; b *= 2.0) breaks.push_back(b);
  breaks.push_back(horizon);
  return integrate_breaks(phi, breaks, 32) / horizon;
}

ProjectionModel spectral_projection_model(const SpectralMeasure& rho) { return ProjectionModel(rho); }

}  // namespace oskit
