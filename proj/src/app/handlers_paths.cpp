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

// Scenario handlers for ospaths.
#include <algorithm>
#include <cmath>
#include <numbers>

#include "app/handlers.hpp"
#include "oskit/ospaths.hpp"
#include "oskit/rng.hpp"

namespace oskit::app {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using namespace oskit::ospaths;

GaussianSpec gaussian_spec(const json& p) {
  GaussianSpec spec;
  const std::string process = str(p, "process", "ou");
  if (process == "ou")
    spec.kind = GaussianSpec::Kind::OU;
  else if (process == "sqexp")
    spec.kind = GaussianSpec::Kind::SqExp;
  else
    schema_error("unknown process '" + process + "'");
  spec.lambda = num(p, "lambda", 1.0);
  spec.times = num_list(p, "times");
  spec.seed = seed(p, "seed", 0);
  return spec;
}

void markov_split(Context& ctx) {
  const json& p = ctx.payload();
  const GaussianSpec spec = gaussian_spec(p);
  const MatrixXd cov = spec.covariance();
  const Index present = integer(p, "present", static_cast<int>(spec.times.size() / 2));
  const MarkovSplit r = markov_property_check(cov, present);
  const bool want = flag(p, "expect_markov", spec.kind == GaussianSpec::Kind::OU);
  if (want)
    ctx.check("cross_residual", r.cross_residual, Cmp::Le, ctx.tol("markov", 1e-10));
  else
    ctx.check("cross_residual", r.cross_residual, Cmp::Gt, ctx.tol("non_markov", 1e-3));
  ctx.check_true("classification", r.is_markov == want);
  ctx.cite("Gaussian Markov property: past and future independent given the present");
}

void gaussian_mc(Context& ctx) {
  const json& p = ctx.payload();
  const GaussianSpec spec = gaussian_spec(p);
  const GaussianSample s = sample_gaussian(spec, integer(p, "paths", 100000));
  ctx.check("max_z", s.max_z, Cmp::Le, ctx.tol("z", 5.0));
  double var = 0.0;
  for (Index i = 0; i < s.empirical.rows(); ++i) var = std::max(var, std::abs(s.empirical(i, i) - 1.0));
  ctx.note("max_variance_deviation", std::to_string(var));
  ctx.cite("finite-dimensional marginals of the OU process are jointly Gaussian");
}

void heat(Context& ctx) {
  const json& p = ctx.payload();
  const double lo = num(p, "lo", -20.0), hi = num(p, "hi", 20.0);
  const Index n = integer(p, "n", 801);
  const double t1 = num(p, "t1", 0.3), t2 = num(p, "t2", 0.7);
  const double var = num(p, "variance", 1.0);
  const auto gauss = [var](double x) { return std::exp(-x * x / (2 * var)) / std::sqrt(2 * std::numbers::pi * var); };
  const Grid f = Grid::sample(lo, hi, n, gauss);
  const Grid composed = heat_semigroup(heat_semigroup(f, t1), t2);
  const Grid direct = heat_semigroup(f, t1 + t2);
  const Grid one = heat_semigroup(Grid::sample(lo, hi, n, [](double) { return 1.0; }), t1);
  const double v2 = var + t1 + t2;
  double closed = 0.0;
  for (Index i = 0; i < n; ++i)
    closed = std::max(closed, std::abs(direct.values(i) - std::exp(-direct.x(i) * direct.x(i) / (2 * v2)) /
                                                              std::sqrt(2 * std::numbers::pi * v2)));
  ctx.check("composition_residual", (composed.values - direct.values).lpNorm<Eigen::Infinity>(), Cmp::Le,
            ctx.tol("semigroup", 1e-8));
  ctx.check("unit_residual", (one.values.array() - 1.0).abs().maxCoeff(), Cmp::Le, ctx.tol("unit", 1e-10));
  ctx.check("closed_form_residual", closed, Cmp::Le, ctx.tol("semigroup", 1e-8));
  ctx.check("min_value", direct.values.minCoeff(), Cmp::Ge, 0.0);

  // Grid value against the pathwise expectation at a few points.
  const long samples = integer(p, "samples", 20000);
  double worst_z = 0.0;
  for (double x : {-1.0, 0.0, 0.5}) {
    const FeynmanKac fk = feynman_kac_mc(TestFunction::Gaussian, t1, x, samples, seed(p, "seed", 21));
    const double grid_value = heat_at(TestFunction::Gaussian, t1, x);
    worst_z = std::max(worst_z, std::abs(fk.mc_estimate - grid_value) / fk.std_error);
  }
  ctx.check("path_agreement_z", worst_z, Cmp::Le, ctx.tol("z", 3.0));
  ctx.cite("e^{t Delta} f = f * gamma_t");
}

TestFunction test_function(const std::string& name) {
  if (name == "one") return TestFunction::One;
  if (name == "identity") return TestFunction::Identity;
  if (name == "indicator") return TestFunction::IndicatorPos;
  if (name == "gaussian") return TestFunction::Gaussian;
  schema_error("unknown test function '" + name + "'");
}

void feynman_kac(Context& ctx) {
  const json& p = ctx.payload();
  const TestFunction f = test_function(str(p, "function"));
  const FeynmanKac r =
      feynman_kac_mc(f, num(p, "t", 1.0), num(p, "x", 0.0), integer(p, "samples", 100000), seed(p, "seed", 7));
  ctx.check("abs_z", std::abs(r.z_score), Cmp::Le, ctx.tol("z", 3.0));
  ctx.note("mc_estimate", std::to_string(r.mc_estimate));
  ctx.note("analytic", std::to_string(r.analytic));
  ctx.cite("(P_t f)(x) = E f(x + B_t)");
}

void mehler(Context& ctx) {
  const json& p = ctx.payload();
  const double lo = num(p, "lo", -12.0), hi = num(p, "hi", 12.0);
  const Index n = integer(p, "n", 481);
  const double t = num(p, "t", 0.5), s = num(p, "s", 0.3);
  const double interior = num(p, "interior", 6.0);
  const auto ground = [](double x) { return std::exp(-x * x / 4); };
  const Grid g = Grid::sample(lo, hi, n, ground);
  const Grid moved = mehler_step(g, t);
  const Grid bump = Grid::sample(lo, hi, n, [](double x) { return std::exp(-(x - 1) * (x - 1)); });
  const Grid composed = mehler_step(mehler_step(bump, t), s);
  const Grid direct = mehler_step(bump, t + s);
  double fixed = 0.0, semigroup = 0.0;
  for (Index i = 0; i < n; ++i) {
    if (std::abs(g.x(i)) >= interior) continue;
    fixed = std::max(fixed, std::abs(moved.values(i) - g.values(i)));
    semigroup = std::max(semigroup, std::abs(composed.values(i) - direct.values(i)));
  }
  ctx.check("fixed_point_residual", fixed, Cmp::Le, ctx.tol("fixed_point", 1e-8));
  ctx.check("semigroup_residual", semigroup, Cmp::Le, ctx.tol("semigroup", 1e-7));
  ctx.check("min_value", std::min(moved.values.minCoeff(), direct.values.minCoeff()), Cmp::Ge, 0.0);
  ctx.cite("the oscillator semigroup fixes e^{-x^2/4}");
}

void pss(Context& ctx) {
  const json& p = ctx.payload();
  const MarkovMatrix chain(real_matrix(field(p, "transition")));
  const PssReport r =
      pss_axiom_check(chain, int_list(p, "powers"), integer(p, "trials", 500), seed(p, "seed", 31));
  ctx.check("min_monomial", r.min_monomial, Cmp::Ge, -ctx.tol("monomial", 1e-12));
  ctx.check("selfadjoint_residual", r.selfadjoint_residual, Cmp::Le, ctx.tol("selfadjoint", 1e-12));
  ctx.note("trials", std::to_string(r.trials));
  ctx.cite("<Omega, A1 P^{s1} A2 ... A_n Omega> >= 0 for positive A_i");
}

}  // namespace

void register_paths(HandlerTable& t) {
  t[{"ospaths", "markov_split"}] = markov_split;
  t[{"ospaths", "gaussian_mc"}] = gaussian_mc;
  t[{"ospaths", "heat"}] = heat;
  t[{"ospaths", "feynman_kac"}] = feynman_kac;
  t[{"ospaths", "mehler"}] = mehler;
  t[{"ospaths", "pss"}] = pss;
}

}  // namespace oskit::app
