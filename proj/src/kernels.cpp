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

#include "oskit/kernels.hpp"

#include <cmath>
#include <numbers>

#include "oskit/quadrature.hpp"

namespace oskit {

using std::numbers::pi;

void validate(const SpectralMeasure& m) {
  const Index b = m.block();
  for (const auto& atom : m.atoms) {
    require(atom.weight.rows() == b && atom.weight.cols() == b, Errc::MeasureNotPositive,
            "atom weights have inconsistent shapes");
    require(std::isfinite(atom.loc), Errc::DomainViolation, "atom location is not finite");
    if (m.support == Support::NonNeg)
      require(atom.loc >= 0.0, Errc::NegativeLocation,
              "atom at " + std::to_string(atom.loc) + " on a nonnegative support");
    const double lo = hermitian_spectrum(atom.weight).minCoeff();
    require(lo >= -1e-12 && hermitian_defect(atom.weight) <= 1e-12, Errc::MeasureNotPositive,
            "atom weight is not positive semidefinite");
  }
}

std::string_view family_name(KernelFamily f) {
  switch (f) {
    case KernelFamily::ExpLine: return "EXP_LINE";
    case KernelFamily::PeriodicGreen: return "PERIODIC_GREEN";
    case KernelFamily::PowerLaw: return "POWER_LAW";
    case KernelFamily::SphereQ: return "SPHERE_Q";
    case KernelFamily::SphereR: return "SPHERE_R";
    case KernelFamily::HypPsi: return "HYP_PSI";
    case KernelFamily::Custom: return "CUSTOM";
  }
  return "?";
}

std::string_view geometry_name(GeometryTag g) {
  switch (g) {
    case GeometryTag::Line: return "LINE";
    case GeometryTag::Interval: return "INTERVAL";
    case GeometryTag::Circle: return "CIRCLE";
    case GeometryTag::Halfspace: return "HALFSPACE";
    case GeometryTag::Halfball: return "HALFBALL";
  }
  return "?";
}

KernelSpec KernelSpec::exp_line(double lambda) {
  KernelSpec k;
  k.lambda = lambda;
  return k;
}

KernelSpec KernelSpec::periodic_green(double lambda, double beta) {
  KernelSpec k;
  k.family = KernelFamily::PeriodicGreen;
  k.lambda = lambda;
  k.beta = beta;
  return k;
}

KernelSpec KernelSpec::power_law(double a, int d) {
  KernelSpec k;
  k.family = KernelFamily::PowerLaw;
  k.exponent = a;
  k.dim = d;
  return k;
}

KernelSpec KernelSpec::sphere_q(double lambda, int n) {
  KernelSpec k;
  k.family = KernelFamily::SphereQ;
  k.lambda = lambda;
  k.dim = n;
  return k;
}

KernelSpec KernelSpec::sphere_r(double lambda, int n, sphere::RVariant variant) {
  KernelSpec k;
  k.family = KernelFamily::SphereR;
  k.lambda = lambda;
  k.dim = n;
  k.variant = variant;
  return k;
}

KernelSpec KernelSpec::hyp_psi(double m, int n) {
  KernelSpec k;
  k.family = KernelFamily::HypPsi;
  k.mass = m;
  k.dim = n;
  return k;
}

KernelSpec KernelSpec::custom(MatC table) {
  KernelSpec k;
  k.family = KernelFamily::Custom;
  k.samples = std::move(table);
  return k;
}

void KernelSpec::validate() const {
  switch (family) {
    case KernelFamily::ExpLine:
      require(lambda >= 0.0, Errc::DomainViolation, "EXP_LINE needs lambda >= 0");
      break;
    case KernelFamily::PeriodicGreen:
      require(lambda >= 0.0 && beta > 0.0, Errc::DomainViolation,
              "PERIODIC_GREEN needs lambda >= 0 and beta > 0");
      break;
    case KernelFamily::PowerLaw:
      require(dim >= 1 && exponent >= 0.0 && exponent < dim, Errc::DomainViolation,
              "POWER_LAW needs 0 <= a < d");
      break;
    case KernelFamily::SphereQ:
    case KernelFamily::SphereR:
      require(dim >= 1 && std::isfinite(lambda), Errc::DomainViolation, "sphere kernels need n >= 1");
      break;
    case KernelFamily::HypPsi:
      require(dim >= 1 && mass > 0.0, Errc::DomainViolation, "HYP_PSI needs n >= 1 and m > 0");
      break;
    case KernelFamily::Custom:
      require(samples.rows() == samples.cols(), Errc::DomainViolation, "CUSTOM table must be square");
      break;
  }
}

int KernelSpec::point_dim() const {
  switch (family) {
    case KernelFamily::ExpLine:
    case KernelFamily::PeriodicGreen:
    case KernelFamily::Custom:
      return 1;
    case KernelFamily::PowerLaw:
    case KernelFamily::SphereR:
      return dim;
    case KernelFamily::SphereQ:
    case KernelFamily::HypPsi:
      return dim + 1;
  }
  return 1;
}

double periodic_green(double lambda, double beta, double x) {
  double r = std::fmod(x, beta);
  if (r < 0.0) r += beta;
  return std::exp(-lambda * r) + std::exp(-lambda * (beta - r));
}

cplx evaluate(const KernelSpec& k, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  switch (k.family) {
    case KernelFamily::ExpLine:
      return std::exp(-k.lambda * std::abs(x(0) - y(0)));
    case KernelFamily::PeriodicGreen:
      return periodic_green(k.lambda, k.beta, x(0) - y(0));
    case KernelFamily::PowerLaw: {
      if (k.exponent == 0.0) return 1.0;
      const double r = (x - y).norm();
      require(r > 0.0, Errc::CoincidentPoints, "power law is singular at coincident points");
      return std::pow(r, -k.exponent);
    }
    case KernelFamily::SphereQ:
      return sphere::q_kernel(k.lambda, k.dim, x, y);
    case KernelFamily::SphereR:
      return sphere::r_kernel(k.lambda, k.dim, x, y, k.variant);
    case KernelFamily::HypPsi:
      return sphere::psi_kernel(k.mass, k.dim, x, y);
    case KernelFamily::Custom: {
      const auto i = static_cast<Index>(x(0)), j = static_cast<Index>(y(0));
      require(i >= 0 && j >= 0 && i < k.samples.rows() && j < k.samples.rows(),
              Errc::DomainViolation, "CUSTOM index outside the sample table");
      return k.samples(i, j);
    }
  }
  return 0.0;
}

Eigen::VectorXd ReflectionGeometry::tau(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y = x;
  switch (tag) {
    case GeometryTag::Line:
    case GeometryTag::Interval:
      y(0) = -x(0);
      break;
    case GeometryTag::Circle: {
      double r = std::fmod(-x(0), beta);
      if (r < 0.0) r += beta;
      y(0) = r;
      break;
    }
    case GeometryTag::Halfspace:
    case GeometryTag::Halfball:
      y(0) = -x(0);
      break;
  }
  return y;
}

bool ReflectionGeometry::in_plus(const Eigen::VectorXd& x) const {
  switch (tag) {
    case GeometryTag::Line:
      return x.size() == 1 && x(0) > 0.0;
    case GeometryTag::Interval:
      return x.size() == 1 && x(0) > 0.0 && x(0) < a;
    case GeometryTag::Circle:
      return x.size() == 1 && x(0) >= 0.0 && x(0) <= beta / 2;
    case GeometryTag::Halfspace:
      return x.size() == dim && x(0) > 0.0;
    case GeometryTag::Halfball:
      return x.size() == dim && x(0) > 0.0 && std::abs(x.norm() - 1.0) <= 1e-12;
  }
  return false;
}

GeometryCheck check_geometry(const ReflectionGeometry& g, const Eigen::MatrixXd& points) {
  GeometryCheck out;
  for (Index j = 0; j < points.cols(); ++j) {
    const Eigen::VectorXd x = points.col(j);
    const Eigen::VectorXd tx = g.tau(x);
    out.involution_residual = std::max(out.involution_residual, (g.tau(tx) - x).norm());
    if (g.in_plus(x) && (tx - x).norm() > 0.0 && g.in_plus(tx)) out.tau_leaves_plus = false;
  }
  return out;
}

namespace {

MatC assemble(const KernelSpec& k, const Eigen::MatrixXd& left, const Eigen::MatrixXd& right) {
  const Index n = left.cols();
  MatC g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g(i, j) = evaluate(k, left.col(i), right.col(j));
  return g;
}

}  // namespace

MatC gram(const KernelSpec& k, const Eigen::MatrixXd& points) {
  k.validate();
  if (k.family == KernelFamily::Custom) {
    require(points.cols() == k.samples.rows(), Errc::DomainViolation,
            "CUSTOM table size does not match the point count");
    return k.samples;
  }
  require(points.rows() == k.point_dim(), Errc::DomainViolation,
          "points have dimension " + std::to_string(points.rows()) + ", kernel expects " +
              std::to_string(k.point_dim()));
  return assemble(k, points, points);
}

MatC reflected_gram(const KernelSpec& k, const ReflectionGeometry& g, const Eigen::MatrixXd& points) {
  k.validate();
  require(k.family != KernelFamily::Custom, Errc::DomainViolation,
          "CUSTOM tables carry no reflection");
  require(points.rows() == k.point_dim(), Errc::DomainViolation, "point dimension mismatch");
  Eigen::MatrixXd reflected(points.rows(), points.cols());
  for (Index j = 0; j < points.cols(); ++j) {
    require(g.in_plus(points.col(j)), Errc::DomainViolation,
            "point " + std::to_string(j) + " is outside the positive region");
    reflected.col(j) = g.tau(points.col(j));
  }
  return assemble(k, points, reflected);
}

FourierCoefficients periodic_fourier_coefficients(double lambda, double beta, int n_max) {
  require(lambda > 0.0 && beta > 0.0 && n_max >= 0, Errc::DomainViolation,
          "need lambda > 0, beta > 0 and n_max >= 0");
  constexpr int panels = 64, order = 64;
  FourierCoefficients out;
  out.nodes = static_cast<long>(panels) * order;
  out.min_coefficient = INFINITY;
  const double num = 2.0 * beta * lambda * (1.0 - std::exp(-beta * lambda));
  for (int n = -n_max; n <= n_max; ++n) {
    const double k = 2.0 * pi * n / beta;
    const double closed = num / (lambda * lambda * beta * beta + 4.0 * pi * pi * n * n);
    // phi(beta - x) = phi(x), so the sine part integrates to zero.
    const double quad =
        integrate([&](double x) { return periodic_green(lambda, beta, x) * std::cos(k * x); }, 0.0,
                  beta, panels, order) /
        beta;
    out.n.push_back(n);
    out.closed_form.push_back(closed);
    out.quadrature.push_back(quad);
    out.max_rel_error = std::max(out.max_rel_error, std::abs(quad - closed) / std::abs(closed));
    out.min_coefficient = std::min(out.min_coefficient, closed);
  }
  return out;
}

Eigen::VectorXd chebyshev_nodes(double lo, double hi, int count) {
  Eigen::VectorXd t(count);
  for (int k = 0; k < count; ++k)
    t(k) = 0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos((2.0 * k + 1.0) * pi / (2.0 * count));
  return t;
}

IntervalReport interval_rp_check(const SpectralMeasure& mu, double a, int grid_size, double tol) {
  require(a > 0.0 && grid_size >= 1, Errc::DomainViolation, "need a > 0 and a nonempty grid");
  SpectralMeasure real = mu;
  real.support = Support::Real;
  validate(real);
  require(real.block() == 1, Errc::DomainViolation, "interval checks take scalar weights");

  const auto phi = [&](double t) {
    double s = 0.0;
    for (const auto& atom : real.atoms) s += atom.weight(0, 0).real() * std::exp(-atom.loc * std::abs(t));
    return s;
  };
  const auto kernel = [&](const Eigen::VectorXd& t, double sign) {
    Eigen::MatrixXd g(t.size(), t.size());
    for (Index i = 0; i < t.size(); ++i)
      for (Index j = 0; j < t.size(); ++j) g(i, j) = phi(0.5 * (t(i) + sign * t(j)));
    return g;
  };

  IntervalReport out;
  out.group_kernel = psd_verdict(kernel(chebyshev_nodes(-a, a, grid_size), -1.0), tol);
  out.semigroup_kernel = psd_verdict(kernel(chebyshev_nodes(0.0, a, grid_size), 1.0), tol);
  double scale = 0.0;
  for (const auto& atom : real.atoms) {
    const double term = atom.loc * atom.weight(0, 0).real() * std::exp(-atom.loc * a);
    out.widder_slope -= term;
    scale += std::abs(term);
  }
  out.slope_predicts_rp = out.widder_slope <= 1e-12 * scale;
  out.prediction_consistent =
      !out.slope_predicts_rp || (out.group_kernel.psd() && out.semigroup_kernel.psd());
  return out;
}

}  // namespace oskit
