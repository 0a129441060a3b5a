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

#include "oskit/kms.hpp"

#include <cmath>
#include <numbers>

namespace oskit::kms {

using std::numbers::pi;

KMSMeasure::KMSMeasure(double beta, std::vector<PlusAtom> plus_atoms)
    : beta_(beta), block_(plus_atoms.empty() ? 1 : plus_atoms.front().weight.rows()),
      plus_(std::move(plus_atoms)) {
  require(beta_ > 0.0, Errc::DomainViolation, "beta must be positive");
  for (const auto& atom : plus_) {
    require(atom.loc >= 0.0, Errc::NegativeLocation, "mu_+ lives on [0, inf)");
    require(atom.weight.rows() == block_ && atom.weight.cols() == block_, Errc::DomainViolation,
            "atom weights have inconsistent shapes");
    require(hermitian_defect(atom.weight) <= 1e-12 && hermitian_spectrum(atom.weight).minCoeff() >= -1e-12,
            Errc::MeasureNotPositive, "atom weight is not positive semidefinite");
    if (atom.loc == 0.0) {
      full_.push_back({0.0, atom.weight + atom.weight.conjugate()});
    } else {
      full_.push_back(atom);
      full_.push_back({-atom.loc, std::exp(-beta_ * atom.loc) * atom.weight.conjugate()});
    }
  }
}

double KMSMeasure::modular_residual() const {
  double worst = 0.0;
  for (const auto& a : full_) {
    MatC mirror = MatC::Zero(block_, block_);
    for (const auto& b : full_)
      if (b.loc == -a.loc) mirror += b.weight;
    const MatC expected = std::exp(-beta_ * a.loc) * a.weight.conjugate();
    worst = std::max(worst, (mirror - expected).norm());
  }
  return worst;
}

MatC kms_function(const KMSMeasure& mu, cplx z) {
  const double b = mu.beta();
  require(z.imag() >= -1e-12 * b && z.imag() <= b * (1.0 + 1e-12), Errc::OutsideStrip,
          "Im z must lie in [0, beta]");
  MatC psi = MatC::Zero(mu.block(), mu.block());
  for (const auto& atom : mu.atoms()) psi += std::exp(cplx(0.0, 1.0) * z * atom.loc) * atom.weight;
  return psi;
}

double kms_residual(const KMSMeasure& mu, const std::vector<double>& times) {
  double worst = 0.0;
  for (double t : times) {
    const MatC top = kms_function(mu, cplx(t, mu.beta()));
    const MatC bottom = kms_function(mu, cplx(t, 0.0));
    worst = std::max(worst, (top - bottom.conjugate()).cwiseAbs().maxCoeff());
  }
  return worst;
}

SkewContraction SkewContraction::from(const MatrixXd& c) {
  require(c.rows() == c.cols(), Errc::DomainViolation, "C must be square");
  const double scale = std::max(1.0, c.norm());
  require((c + c.transpose()).norm() <= 1e-12 * scale, Errc::DomainViolation, "C is not skew-symmetric");
  SkewContraction out;
  out.c = c;
  out.norm = spectral_norm(c);
  require(out.norm < 1.0, Errc::NotStrictContraction,
          "|C| = " + std::to_string(out.norm) + " is not below 1");
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(c.transpose() * c);
  const Eigen::VectorXd s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::VectorXd inv(s.size());
  for (Index i = 0; i < s.size(); ++i) inv(i) = s(i) > 1e-12 ? 1.0 / s(i) : 0.0;
  out.modulus = es.eigenvectors() * s.asDiagonal() * es.eigenvectors().transpose();
  out.complex_structure = c * es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
  return out;
}

MatC phi_from_contraction(const SkewContraction& c, double beta, double t) {
  require(beta > 0.0, Errc::DomainViolation, "beta must be positive");
  require(t >= -1e-12 * beta && t <= beta * (1.0 + 1e-12), Errc::DomainViolation,
          "t must lie in [0, beta]");
  const double s = std::clamp(t / beta, 0.0, 1.0);
  const MatC ic = cplx(0.0, 1.0) * c.c.cast<cplx>();
  return hermitian_apply<cplx>(ic, [s](double x) { return std::pow(1.0 + x, 1.0 - s) * std::pow(1.0 - x, s); });
}

MatC phi_extended(const SkewContraction& c, double beta, double t) {
  double r = std::fmod(t, 2.0 * beta);
  if (r < 0.0) r += 2.0 * beta;
  if (r <= beta) return phi_from_contraction(c, beta, r);
  return phi_from_contraction(c, beta, r - beta).conjugate();
}

ExtensionParts extension_parts(const SkewContraction& c, double beta, double t) {
  const MatC phi = phi_extended(c, beta, t);
  return {phi.real(), -c.complex_structure * phi.imag()};
}

namespace {

template <class F>
MatC block_kernel(Index points, Index block, F&& entry) {
  MatC g(points * block, points * block);
  for (Index a = 0; a < points; ++a)
    for (Index b = 0; b < points; ++b) g.block(a * block, b * block, block, block) = entry(a, b);
  return g;
}

}  // namespace

ExtensionReport rp_extension_check(const SkewContraction& c, double beta,
                                   const std::vector<double>& grid, double tol, bool flip_odd) {
  for (double t : grid)
    require(t >= -1e-12 && t <= beta / 2 * (1.0 + 1e-12), Errc::DomainViolation,
            "grid must lie in [0, beta/2]");
  const Index d = c.c.rows();
  const double sign = flip_odd ? -1.0 : 1.0;
  const MatC ii = cplx(0.0, 1.0) * c.complex_structure.cast<cplx>();
  // f(t, e) = u+ + u-, f(t, tau) = u+ + iI u-.
  const auto f = [&](double t, int eps) -> MatC {
    const ExtensionParts p = extension_parts(c, beta, t);
    const MatC odd = sign * p.u_minus.cast<cplx>();
    return eps == 0 ? MatC(p.u_plus.cast<cplx>() + odd) : MatC(p.u_plus.cast<cplx>() + ii * odd);
  };

  const auto n = static_cast<Index>(grid.size());
  ExtensionReport out;
  const MatC reflected = block_kernel(n, d, [&](Index a, Index b) { return f(grid[a] + grid[b], 1); });
  out.reflected_pd = psd_verdict(reflected, tol, 1e-10);

  // (t, eps)^{-1} (s, delta) = ((-1)^eps (s - t), eps xor delta)
  const MatC group = block_kernel(2 * n, d, [&](Index a, Index b) {
    const int ea = static_cast<int>(a / n), eb = static_cast<int>(b / n);
    const double ta = grid[a % n], tb = grid[b % n];
    return f((ea ? -1.0 : 1.0) * (tb - ta), ea ^ eb);
  });
  out.group_pd = psd_verdict(group, tol, 1e-10);
  return out;
}

ExtensionReport rp_extension_check(const KMSMeasure& mu, const std::vector<double>& grid, double tol) {
  for (double t : grid)
    require(t >= -1e-12 && t <= mu.beta() / 2 * (1.0 + 1e-12), Errc::DomainViolation,
            "grid must lie in [0, beta/2]");
  const auto n = static_cast<Index>(grid.size());
  ExtensionReport out;
  out.reflected_pd = psd_verdict(block_kernel(n, mu.block(), [&](Index a, Index b) {
                                   return kms_function(mu, cplx(0.0, grid[a] + grid[b]));
                                 }),
                                 tol, 1e-10);
  std::vector<double> sym;
  for (double t : grid) sym.push_back(t);
  for (double t : grid) sym.push_back(-t);
  out.group_pd = psd_verdict(block_kernel(2 * n, mu.block(), [&](Index a, Index b) {
                               return kms_function(mu, cplx(sym[a] - sym[b], 0.0));
                             }),
                             tol, 1e-10);
  return out;
}

std::vector<double> half_period_grid(double beta, int count) {
  std::vector<double> g(count);
  for (int k = 0; k < count; ++k) g[k] = count == 1 ? 0.0 : 0.5 * beta * k / (count - 1);
  return g;
}

double thermal_green(double kappa, double beta, double t, int sign) {
  double r = std::fmod(t, 2.0 * beta);
  if (r < 0.0) r += 2.0 * beta;
  double flip = 1.0;
  if (r > beta) {
    r -= beta;
    if (sign < 0) flip = -1.0;
  }
  const double odd = sign < 0 ? -1.0 : 1.0;
  return flip * (std::exp(-kappa * r) + odd * std::exp(-kappa * (beta - r))) /
         (1.0 + std::exp(-kappa * beta));
}

double matsubara_coefficient(double kappa, double beta, int n) {
  const double num = (n % 2 == 0) ? std::tanh(beta * kappa / 2) * 2.0 * kappa / beta : 2.0 * kappa / beta;
  const double w = n * pi / beta;
  return num / (kappa * kappa + w * w);
}

MatsubaraResult matsubara(double kappa, double beta, int n_max, int samples) {
  require(kappa > 0.0 && beta > 0.0, Errc::DomainViolation, "need lambda > 0 and beta > 0");
  require(samples >= 16 && samples % 4 == 0, Errc::DomainViolation, "sample count must be a multiple of 4");
  MatsubaraResult out;
  out.c_plus = std::tanh(beta * kappa / 2) * 2.0 * kappa / beta;
  out.c_minus = 2.0 * kappa / beta;
  out.samples = samples;

  std::vector<double> u(samples);
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * beta * k / samples;
    u[k] = thermal_green(kappa, beta, t, 1) + thermal_green(kappa, beta, t, -1);
  }
  // The kinks sit on grid points, so the trapezoidal error expands in even
  // powers of the step and two Richardson sweeps remove h^2 and h^4.
  const auto dft = [&](int n, int stride) {
    cplx s = 0.0;
    for (int k = 0; k < samples; k += stride) {
      const double t = 2.0 * beta * k / samples;
      s += u[k] * std::exp(cplx(0.0, -pi * n * t / beta));
    }
    return s * (static_cast<double>(stride) / samples);
  };
  for (int n = -n_max; n <= n_max; ++n) {
    const cplx t1 = dft(n, 1), t2 = dft(n, 2), t4 = dft(n, 4);
    const cplx r1 = (4.0 * t1 - t2) / 3.0, r2 = (4.0 * t2 - t4) / 3.0;
    const cplx extrapolated = (16.0 * r1 - r2) / 15.0;
    const double closed = matsubara_coefficient(kappa, beta, n);
    out.n.push_back(n);
    out.closed_form.push_back(closed);
    out.dft.push_back(extrapolated);
    out.fft_check = std::max(out.fft_check, std::abs(extrapolated - closed) / closed);
    out.raw_dft_check = std::max(out.raw_dft_check, std::abs(t1 - closed) / closed);
  }
  return out;
}

RoundtripResult standard_subspace_roundtrip(const StandardSubspaceModel& model) {
  const auto d = static_cast<Index>(model.delta.size());
  require(d >= 1 && static_cast<Index>(model.pairing.size()) == d, Errc::DomainViolation,
          "modular spectrum and pairing must have the same length");
  for (Index k = 0; k < d; ++k) {
    const int p = model.pairing[k];
    require(p >= 0 && p < d && model.pairing[p] == k, Errc::DomainViolation,
            "pairing is not an involution");
    require(model.delta[k] > 0.0, Errc::DomainViolation, "modular spectrum must be positive");
    require(std::abs(model.delta[k] * model.delta[p] - 1.0) <= 1e-12, Errc::ModularRelationViolated,
            "J Delta J != Delta^{-1} at index " + std::to_string(k));
  }
  // S = J Delta^{1/2} on (Re x, Im x).
  MatrixXd s = MatrixXd::Zero(2 * d, 2 * d);
  for (Index k = 0; k < d; ++k) {
    const int p = model.pairing[k];
    const double root = std::sqrt(model.delta[p]);
    s(k, p) = root;
    s(d + k, d + p) = -root;
  }
  const MatrixXd fixed = orthonormal_kernel<double>(s - MatrixXd::Identity(2 * d, 2 * d), 1e-12);
  require(fixed.cols() == d, Errc::DomainViolation, "Fix(J Delta^{1/2}) has the wrong dimension");

  RoundtripResult out;
  out.basis = fixed.topRows(d).cast<cplx>() + cplx(0.0, 1.0) * fixed.bottomRows(d).cast<cplx>();
  const MatC inner = out.basis.adjoint() * out.basis;
  const MatrixXd c = inner.imag();
  out.skew_residual = (c + c.transpose()).norm();
  // Re part must be the identity for the basis to be V-orthonormal.
  out.im_residual = (inner - (MatC::Identity(d, d) + cplx(0.0, 1.0) * c.cast<cplx>())).norm();

  MatrixXd both(2 * d, 2 * d);
  both << fixed, (MatrixXd(2 * d, d) << -fixed.bottomRows(d), fixed.topRows(d)).finished();
  out.real_rank = numerical_rank(both, 1e-10);
  out.contraction = SkewContraction::from((c - c.transpose()) / 2.0);
  return out;
}

MatC modular_pairing(const StandardSubspaceModel& model, const MatC& basis, double beta, double t) {
  VecC scale(basis.rows());
  for (Index k = 0; k < basis.rows(); ++k) scale(k) = std::pow(model.delta[k], t / beta);
  return basis.adjoint() * scale.asDiagonal() * basis;
}

}  // namespace oskit::kms
