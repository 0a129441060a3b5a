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

#include <cstdint>
#include <functional>
#include <vector>

#include "oskit/linalg.hpp"
#include "oskit/rng.hpp"

// Finite-dimensional marginals of Gaussian processes, heat and Mehler
// semigroups on grids, Monte-Carlo path averages and positivity axioms for
// reversible Markov chains.
namespace oskit::ospaths {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd ou_covariance(double lambda, const std::vector<double>& times);
MatrixXd sqexp_covariance(double lambda, const std::vector<double>& times);

struct MarkovSplit {
  double cross_residual = 0.0;
  bool is_markov = false;
};

// Past = indices before `present`, future = after it.
MarkovSplit markov_property_check(const MatrixXd& cov, Index present);

struct GaussianSpec {
  enum class Kind { OU, SqExp };
  Kind kind = Kind::OU;
  double lambda = 1.0;
  std::vector<double> times;
  std::uint64_t seed = 0;

  MatrixXd covariance() const;
};

struct GaussianSample {
  MatrixXd covariance;
  MatrixXd empirical;
  MatrixXd std_error;
  double max_z = 0.0;  // max |empirical - model| / std_error
  MatrixXd paths;      // n_paths x times when kept
};

// Eigen square root of the covariance; path p uses the stream split(p).
GaussianSample sample_gaussian(const GaussianSpec& spec, long n_paths, bool keep_paths = false);

// The p-th path alone, for determinism checks.
VectorXd sample_path(const GaussianSpec& spec, std::uint64_t index);

struct Grid {
  double lo = 0.0;
  double step = 1.0;
  VectorXd values;

  double x(Index i) const { return lo + step * static_cast<double>(i); }
  Index size() const { return values.size(); }
  static Grid sample(double lo, double hi, Index n, const std::function<double(double)>& f);
};

enum class Boundary { Periodic, ZeroPad };

// (f * gamma_t)(x_i) by the grid rule; gamma_t has variance t.
Grid heat_semigroup(const Grid& f, double t, Boundary boundary = Boundary::Periodic);

// e^{-tH} f, H = -d^2 + x^2/4 - 1/2, via the ground-state transform to the
// Ornstein-Uhlenbeck kernel. Values outside the grid count as zero.
Grid mehler_step(const Grid& f, double t);

enum class TestFunction { One, Identity, IndicatorPos, Gaussian };

double evaluate(TestFunction f, double x);

// E f(x + sqrt(t) Z) by Gauss-Legendre over Z with breakpoints at kinks.
double heat_at(TestFunction f, double t, double x);

struct FeynmanKac {
  double mc_estimate = 0.0;
  double analytic = 0.0;
  double std_error = 0.0;
  double z_score = 0.0;
};

FeynmanKac feynman_kac_mc(TestFunction f, double t, double x, long n_samples, std::uint64_t seed);

class MarkovMatrix {
 public:
  // Checks stochasticity and computes the stationary vector.
  explicit MarkovMatrix(MatrixXd p);

  const MatrixXd& p() const { return p_; }
  const VectorXd& stationary() const { return pi_; }
  double balance_defect() const;  // max |pi_i P_ij - pi_j P_ji|
  bool reversible(double tol = 1e-12) const { return balance_defect() <= tol; }

 private:
  MatrixXd p_;
  VectorXd pi_;
};

struct PssReport {
  double min_monomial = 0.0;
  double selfadjoint_residual = 0.0;
  long trials = 0;
  bool pass = false;
};

// Random monomials <1, A_1 P^{s_1} A_2 ... P^{s_{k-1}} A_k 1>_pi with
// nonnegative diagonal A_i.
PssReport pss_axiom_check(const MarkovMatrix& p, const std::vector<int>& powers, long n_trials,
                          std::uint64_t seed);

double monomial(const MarkovMatrix& p, const std::vector<VectorXd>& diagonals,
                const std::vector<int>& exponents);

}  // namespace oskit::ospaths
