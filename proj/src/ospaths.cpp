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

#include "oskit/ospaths.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oskit/quadrature.hpp"

namespace oskit::ospaths {

using std::numbers::pi;

MatrixXd ou_covariance(double lambda, const std::vector<double>& times) {
  require(lambda >= 0.0, Errc::DomainViolation, "OU rate must be >= 0");
  const auto n = static_cast<Index>(times.size());
  MatrixXd c(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) c(i, j) = std::exp(-lambda * std::abs(times[i] - times[j]));
  return c;
}

MatrixXd sqexp_covariance(double lambda, const std::vector<double>& times) {
  require(lambda >= 0.0, Errc::DomainViolation, "squared-exponential rate must be >= 0");
  const auto n = static_cast<Index>(times.size());
  MatrixXd c(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const double d = times[i] - times[j];
      c(i, j) = std::exp(-lambda * d * d);
    }
  return c;
}

MarkovSplit markov_property_check(const MatrixXd& cov, Index present) {
  require(cov.rows() == cov.cols() && present >= 0 && present < cov.rows(), Errc::DomainViolation,
          "split index outside the covariance");
  const double c00 = cov(present, present);
  require(c00 > 1e-14 * std::max(1.0, cov.diagonal().maxCoeff()), Errc::SingularPresent,
          "variance at the present time vanishes");
  const Index nf = cov.rows() - present - 1;
  const MatrixXd pf = cov.block(0, present + 1, present, nf);
  const MatrixXd p0 = cov.block(0, present, present, 1);
  const MatrixXd f0 = cov.block(present, present + 1, 1, nf);
  MarkovSplit out;
  out.cross_residual = pf.size() ? (pf - p0 * f0 / c00).cwiseAbs().maxCoeff() : 0.0;
  out.is_markov = out.cross_residual <= 1e-10;
  return out;
}

MatrixXd GaussianSpec::covariance() const {
  return kind == Kind::OU ? ou_covariance(lambda, times) : sqexp_covariance(lambda, times);
}

namespace {

MatrixXd covariance_root(const MatrixXd& cov) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(cov);
  const VectorXd e = es.eigenvalues();
  require(e.size() == 0 || e(0) >= -1e-10 * std::max(1.0, e(e.size() - 1)), Errc::NotPsd,
          "covariance has eigenvalue " + std::to_string(e.size() ? e(0) : 0.0));
  return es.eigenvectors() * e.cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

VectorXd path_from_root(const MatrixXd& root, const CounterRng& rng, std::uint64_t index) {
  const CounterRng stream = rng.split(index);
  VectorXd z(root.cols());
  for (Index k = 0; k < z.size(); ++k) z(k) = stream.normal(static_cast<std::uint64_t>(k));
  return root * z;
}

}  // namespace

VectorXd sample_path(const GaussianSpec& spec, std::uint64_t index) {
  return path_from_root(covariance_root(spec.covariance()), CounterRng(spec.seed), index);
}

GaussianSample sample_gaussian(const GaussianSpec& spec, long n_paths, bool keep_paths) {
  require(n_paths >= 2, Errc::DomainViolation, "need at least two paths");
  GaussianSample out;
  out.covariance = spec.covariance();
  const MatrixXd root = covariance_root(out.covariance);
  const CounterRng rng(spec.seed);
  const Index n = out.covariance.rows();
  MatrixXd sum = MatrixXd::Zero(n, n), sum_sq = MatrixXd::Zero(n, n);
  if (keep_paths) out.paths.resize(n_paths, n);
  for (long p = 0; p < n_paths; ++p) {
    const VectorXd x = path_from_root(root, rng, static_cast<std::uint64_t>(p));
    const MatrixXd prod = x * x.transpose();
    sum += prod;
    sum_sq += prod.cwiseProduct(prod);
    if (keep_paths) out.paths.row(p) = x.transpose();
  }
  const double np = static_cast<double>(n_paths);
  out.empirical = sum / np;
  const MatrixXd var = (sum_sq / np - out.empirical.cwiseProduct(out.empirical)) * (np / (np - 1.0));
  out.std_error = var.cwiseMax(0.0).cwiseSqrt() / std::sqrt(np);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const double diff = std::abs(out.empirical(i, j) - out.covariance(i, j));
      if (out.std_error(i, j) > 0.0)
        out.max_z = std::max(out.max_z, diff / out.std_error(i, j));
      else if (diff > 1e-12)
        out.max_z = INFINITY;
    }
  return out;
}

Grid Grid::sample(double lo, double hi, Index n, const std::function<double(double)>& f) {
  require(n >= 2 && hi > lo, Errc::DomainViolation, "grid needs n >= 2 and hi > lo");
  Grid g;
  g.lo = lo;
  g.step = (hi - lo) / static_cast<double>(n - 1);
  g.values.resize(n);
  for (Index i = 0; i < n; ++i) g.values(i) = f(g.x(i));
  return g;
}

namespace {

void require_resolved(double width, double step) {
  const double alias = std::exp(-2.0 * pi * pi * width * width / (step * step));
  require(alias <= 1e-12, Errc::GridTooCoarse,
          "kernel width " + std::to_string(width) + " is unresolved at step " + std::to_string(step));
}

}  // namespace

Grid heat_semigroup(const Grid& f, double t, Boundary boundary) {
  require(t > 0.0, Errc::DomainViolation, "t must be positive");
  const double sd = std::sqrt(t);
  require_resolved(sd, f.step);
  const Index n = f.size();
  const double period = f.step * static_cast<double>(n);
  const int images =
      boundary == Boundary::Periodic ? static_cast<int>(std::ceil(12.0 * sd / period)) + 1 : 0;
  const double norm = f.step / std::sqrt(2.0 * pi * t);
  Grid out = f;
  for (Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Index j = 0; j < n; ++j) {
      const double d = static_cast<double>(i - j) * f.step;
      double k = 0.0;
      for (int m = -images; m <= images; ++m) {
        const double dm = d + m * period;
        k += std::exp(-dm * dm / (2.0 * t));
      }
      acc += k * f.values(j);
    }
    out.values(i) = norm * acc;
  }
  return out;
}

Grid mehler_step(const Grid& f, double t) {
  require(t > 0.0, Errc::DomainViolation, "t must be positive");
  const double decay = std::exp(-t);
  const double s2 = -std::expm1(-2.0 * t);
  require_resolved(std::sqrt(s2), f.step);
  const double norm = f.step / std::sqrt(2.0 * pi * s2);
  Grid out = f;
  for (Index i = 0; i < f.size(); ++i) {
    const double x = f.x(i);
    double acc = 0.0;
    for (Index j = 0; j < f.size(); ++j) {
      const double y = f.x(j);
      const double shift = y - x * decay;
      acc += std::exp((y * y - x * x) / 4.0 - shift * shift / (2.0 * s2)) * f.values(j);
    }
    out.values(i) = norm * acc;
  }
  return out;
}

double evaluate(TestFunction f, double x) {
  switch (f) {
    case TestFunction::One: return 1.0;
    case TestFunction::Identity: return x;
    case TestFunction::IndicatorPos: return x >= 0.0 ? 1.0 : 0.0;
    case TestFunction::Gaussian: return std::exp(-x * x / 2.0);
  }
  return 0.0;
}

double heat_at(TestFunction f, double t, double x) {
  require(t > 0.0, Errc::DomainViolation, "t must be positive");
  const double sd = std::sqrt(t);
  std::vector<double> breaks;
  for (int k = -12; k <= 12; ++k) breaks.push_back(k);
  if (f == TestFunction::IndicatorPos) {
    const double kink = -x / sd;
    if (kink > -12.0 && kink < 12.0) breaks.push_back(kink);
    std::sort(breaks.begin(), breaks.end());
  }
  return integrate_breaks(
      [&](double z) { return evaluate(f, x + sd * z) * std::exp(-z * z / 2.0) / std::sqrt(2.0 * pi); },
      breaks, 32);
}

FeynmanKac feynman_kac_mc(TestFunction f, double t, double x, long n_samples, std::uint64_t seed) {
  require(t > 0.0 && n_samples >= 2, Errc::DomainViolation, "need t > 0 and two samples");
  const CounterRng rng(seed);
  const double sd = std::sqrt(t);
  double sum = 0.0, sum_sq = 0.0;
  for (long k = 0; k < n_samples; ++k) {
    const double v = evaluate(f, x + sd * rng.normal(static_cast<std::uint64_t>(k)));
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(n_samples);
  FeynmanKac out;
  out.mc_estimate = sum / n;
  out.analytic = heat_at(f, t, x);
  const double var = std::max(0.0, (sum_sq / n - out.mc_estimate * out.mc_estimate) * n / (n - 1.0));
  out.std_error = std::sqrt(var / n);
  const double diff = out.mc_estimate - out.analytic;
  if (out.std_error > 0.0)
    out.z_score = diff / out.std_error;
  else
    out.z_score = std::abs(diff) <= 1e-12 ? 0.0 : INFINITY;
  return out;
}

MarkovMatrix::MarkovMatrix(MatrixXd p) : p_(std::move(p)) {
  require(p_.rows() == p_.cols() && p_.rows() >= 1, Errc::DomainViolation, "P must be square");
  const Index k = p_.rows();
  require(p_.minCoeff() >= 0.0, Errc::DomainViolation, "P has negative entries");
  require((p_.rowwise().sum() - VectorXd::Ones(k)).cwiseAbs().maxCoeff() <= 1e-12,
          Errc::DomainViolation, "rows of P do not sum to 1");
  MatrixXd a(k + 1, k);
  a.topRows(k) = p_.transpose() - MatrixXd::Identity(k, k);
  a.row(k).setOnes();
  VectorXd rhs = VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  pi_ = a.colPivHouseholderQr().solve(rhs);
  require((p_.transpose() * pi_ - pi_).cwiseAbs().maxCoeff() <= 1e-12 * std::max<double>(1.0, k),
          Errc::DomainViolation, "P has no unique stationary distribution");
}

double MarkovMatrix::balance_defect() const {
  const MatrixXd flow = pi_.asDiagonal() * p_;
  return (flow - flow.transpose()).cwiseAbs().maxCoeff();
}

namespace {

VectorXd apply_power(const MatrixXd& p, VectorXd v, int n) {
  for (int i = 0; i < n; ++i) v = p * v;
  return v;
}

}  // namespace

double monomial(const MarkovMatrix& p, const std::vector<VectorXd>& diagonals,
                const std::vector<int>& exponents) {
  require(!diagonals.empty() && exponents.size() + 1 == diagonals.size(), Errc::DomainViolation,
          "need one more diagonal than exponents");
  VectorXd v = diagonals.back();
  for (std::size_t i = exponents.size(); i-- > 0;)
    v = diagonals[i].cwiseProduct(apply_power(p.p(), v, exponents[i]));
  return p.stationary().dot(v);
}

PssReport pss_axiom_check(const MarkovMatrix& p, const std::vector<int>& powers, long n_trials,
                          std::uint64_t seed) {
  require(!powers.empty(), Errc::DomainViolation, "need at least one exponent");
  for (int s : powers) require(s >= 0, Errc::DomainViolation, "exponents must be >= 0");
  require(p.reversible(), Errc::NotReversible,
          "detailed balance fails by " + std::to_string(p.balance_defect()));
  RngStream rng(seed, 0x707373);
  const Index k = p.p().rows();
  PssReport out;
  out.min_monomial = INFINITY;
  out.trials = n_trials;
  const auto random_vec = [&](double lo) {
    VectorXd v(k);
    for (Index i = 0; i < k; ++i) v(i) = rng.uniform(lo, 1.0);
    return v;
  };
  for (long trial = 0; trial < n_trials; ++trial) {
    const int length = 1 + static_cast<int>(rng.below(5));
    std::vector<VectorXd> diag;
    std::vector<int> exps;
    for (int i = 0; i < length; ++i) diag.push_back(random_vec(0.0));
    for (int i = 0; i + 1 < length; ++i) exps.push_back(powers[rng.below(powers.size())]);
    out.min_monomial = std::min(out.min_monomial, monomial(p, diag, exps));

    const VectorXd f = random_vec(-1.0), h = random_vec(-1.0);
    const int n = powers[rng.below(powers.size())];
    const VectorXd pi_weights = p.stationary();
    const double lhs = pi_weights.dot(apply_power(p.p(), f, n).cwiseProduct(h));
    const double rhs = pi_weights.dot(f.cwiseProduct(apply_power(p.p(), h, n)));
    out.selfadjoint_residual = std::max(out.selfadjoint_residual, std::abs(lhs - rhs));
  }
  out.pass = out.min_monomial >= -1e-12 && out.selfadjoint_residual <= 1e-10;
  return out;
}

}  // namespace oskit::ospaths
