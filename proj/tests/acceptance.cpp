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

// Acceptance criteria at their stated tolerances, one line per criterion.
// Exit status is nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "app/scenario.hpp"
#include "oskit/dilation.hpp"
#include "oskit/freefield.hpp"
#include "oskit/instances.hpp"
#include "oskit/kernels.hpp"
#include "oskit/kms.hpp"
#include "oskit/ospaths.hpp"
#include "oskit/rphs.hpp"
#include "oskit/sphere.hpp"

using namespace oskit;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// Worst-case summary of a criterion: ok plus a short detail string.
struct Outcome {
  bool ok = true;
  std::string detail;

  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

MatrixXd line_points(double lo, double hi, int count) {
  MatrixXd p(1, count);
  for (int i = 0; i < count; ++i) p(0, i) = lo + (hi - lo) * i / (count - 1);
  return p;
}

Outcome green_kernel() {
  Outcome o;
  double worst_rel = INFINITY, worst_rank = 0.0;
  for (double lambda : {0.1, 1.0, 10.0}) {
    const KernelSpec k = KernelSpec::exp_line(lambda);
    const GramReport g = psd_verdict(gram(k, line_points(-10, 10, 64)), 1e-10);
    worst_rel = std::min(worst_rel, g.min_eig / g.max_eig);
    o.need(g.min_eig >= -1e-10 * g.max_eig, "gram lambda=" + fmt(lambda));
    const MatC r = reflected_gram(k, ReflectionGeometry::line(), line_points(0.3125, 10, 32));
    const Eigen::VectorXd s = singular_values(r);
    o.need(psd_verdict(r, 1e-10).psd(), "reflected lambda=" + fmt(lambda));
    worst_rank = std::max(worst_rank, s(1) / s(0));
  }
  o.need(worst_rank <= 1e-10, "rank one");
  o.detail = "min_eig/max_eig=" + fmt(worst_rel) + " sigma2/sigma1=" + fmt(worst_rank) +
             (o.detail.empty() ? "" : " [" + o.detail + "]");
  return o;
}

Outcome periodic_coefficients() {
  Outcome o;
  double worst = 0.0, min_c = INFINITY;
  for (double lambda : {0.5, 1.0, 4.0})
    for (double beta : {0.5, 1.0, 4.0}) {
      const FourierCoefficients fc = periodic_fourier_coefficients(lambda, beta, 64);
      worst = std::max(worst, fc.max_rel_error);
      min_c = std::min(min_c, fc.min_coefficient);
    }
  o.need(worst <= 1e-8, "relative error");
  o.need(min_c >= 0.0, "negative coefficient");
  o.detail = "max_rel=" + fmt(worst) + " min_c=" + fmt(min_c) + (o.ok ? "" : " [" + o.detail + "]");
  return o;
}

Outcome widder() {
  Outcome o;
  const IntervalReport atom = interval_rp_check(SpectralMeasure::scalar({{1.0, 1.0}}), 2.0, 24, 1e-8);
  o.need(atom.group_kernel.psd() && atom.semigroup_kernel.psd(), "delta_1");
  const double beta = 2.0;
  const IntervalReport pair = interval_rp_check(
      SpectralMeasure::scalar({{1.0, 1.0}, {-1.0, std::exp(-beta)}}, Support::Real), beta / 2, 24, 1e-8);
  o.need(pair.group_kernel.psd() && pair.semigroup_kernel.psd(), "periodic pair");
  const IntervalReport neg =
      interval_rp_check(SpectralMeasure::scalar({{-1.0, 1.0}}, Support::Real), 2.0, 24, 1e-8);
  o.need(neg.group_kernel.min_eig < -1e-6, "delta_-1 control");
  o.detail = "delta_-1 group min_eig=" + fmt(neg.group_kernel.min_eig) + (o.ok ? "" : " [" + o.detail + "]");
  return o;
}

Outcome os_bound() {
  Outcome o;
  RngStream rng(7, 0x6f73);
  double excess = -INFINITY, square = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Index p = 1 + rng.below(4), q = 1 + rng.below(4);
    std::vector<double> sv(std::min(p, q));
    for (auto& s : sv) s = rng.uniform() < 0.25 ? 1.0 : rng.uniform();
    const auto inst = instances::graph_instance(p, q, sv, rng);
    const MatC s = instances::random_theta_symmetric(inst.space, rng);
    const OSQuotient quo = os_quotient(inst.space);
    if (quo.rank == 0) continue;
    excess = std::max(excess, spectral_norm(os_transform(inst.space, quo, s)) - restricted_norm(inst.space, s));
  }
  for (int t = 0; t < 50; ++t) {
    const auto inst = instances::twisted_unitary_instance(rng);
    const OSQuotient quo = os_quotient(inst.space);
    const MatC hat = os_transform(inst.space, quo, inst.coords);
    square = std::max(square, (hat * hat - MatC::Identity(quo.rank, quo.rank)).norm());
  }
  o.need(excess <= 1e-10, "norm bound");
  o.need(square <= 1e-9, "unitary square");
  o.detail = "max(||S_hat||-||S||)=" + fmt(excess) + " max||U_hat^2-1||=" + fmt(square);
  return o;
}

Outcome markov_agreement() {
  Outcome o;
  RngStream rng(11, 0x6d6b76);
  int disagree = 0, markov_count = 0;
  for (int t = 0; t < 100; ++t) {
    const auto inst = instances::markov_instance(rng);
    const MarkovReport r = markov_check(inst.graph.space, inst.graph.e0_basis, 1e-9);
    disagree += !r.criteria_agree;
    markov_count += r.is_markov;
  }
  o.need(disagree == 0, "disagreement");
  o.detail = "disagreements=" + std::to_string(disagree) + " markov=" + std::to_string(markov_count) + "/100";
  return o;
}

Outcome hardy_residues() {
  Outcome o;
  const HermitianSemigroup h{{0.3, 2.0, 7.0}};
  VecC xi(3);
  xi << 1.0, cplx(0.5, -0.5), 2.0;
  const cplx z[] = {{0.5, 0}, {1, 1}, {2, -3}, {0.2, 0.7}, {4, 0.5}};
  MatC g(5, 5);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const HardyResult r = hardy_twisted_inner(h, z[i], z[j], xi, xi);
      g(i, j) = r.residue_value;
      worst = std::max(worst, r.rel_discrepancy);
    }
  const GramReport rep = psd_verdict(g, 1e-9, 1e-10);
  o.need(worst <= 1e-6, "quadrature");
  o.need(rep.psd(), "twisted gram");
  o.detail = "max_rel=" + fmt(worst) + " gram min_eig=" + fmt(rep.min_eig);
  return o;
}

Outcome fixed_point() {
  Outcome o;
  const ProjectionModel m = spectral_projection_model(SpectralMeasure::scalar({{0.0, 0.3}, {2.0, 0.7}}));
  const double avg = m.cesaro(1e3);
  o.need(std::abs(avg - 0.3) <= 1e-2, "cesaro");
  o.detail = "cesaro(1e3)=" + fmt(avg);
  return o;
}

Outcome kms_checks() {
  Outcome o;
  double worst = 0.0;
  RngStream rng(5, 0x6b6d73);
  std::vector<double> times(32);
  for (auto& t : times) t = rng.uniform(-5.0, 5.0);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<kms::PlusAtom> atoms;
    for (int k = 0; k < 3; ++k) {
      const MatC a = instances::random_complex(2, 2, rng);
      atoms.push_back({rng.uniform(0.0, 3.0), a * a.adjoint()});
    }
    worst = std::max(worst, kms::kms_residual(kms::KMSMeasure(0.5 + trial, atoms), times));
  }
  o.need(worst <= 1e-12, "kms residual");
  const auto grid = kms::half_period_grid(1.0, 16);
  double flipped_min = INFINITY;
  for (double mu : {0.2, 0.5, 0.8}) {
    MatrixXd c = MatrixXd::Zero(2, 2);
    c(0, 1) = -mu;
    c(1, 0) = mu;
    const auto sc = kms::SkewContraction::from(c);
    const auto r = kms::rp_extension_check(sc, 1.0, grid, 1e-8);
    o.need(r.group_pd.psd() && r.reflected_pd.psd(), "extension |C|=" + fmt(mu));
    const auto f = kms::rp_extension_check(sc, 1.0, grid, 1e-8, true);
    o.need(!f.group_pd.psd(), "flipped control |C|=" + fmt(mu));
    flipped_min = std::min(flipped_min, -f.group_pd.relative_min());
  }
  o.detail = "kms residual=" + fmt(worst) + " flipped min_eig_rel<=" + fmt(-flipped_min) +
             (o.ok ? "" : " [" + o.detail + "]");
  return o;
}

Outcome matsubara_fft() {
  Outcome o;
  const kms::MatsubaraResult r = kms::matsubara(1.0, 2.0, 32);
  o.need(r.fft_check <= 1e-6, "fft");
  o.detail = "max |fft - closed| =" + fmt(r.fft_check);
  return o;
}

Outcome sphere_window() {
  Outcome o;
  double hyp = 0.0;
  const HypParams params[] = {{0.3, 1.7, 2.2}, sphere::psi_params(0.5, 2), sphere::psi_params(2.0, 2),
                              sphere::psi_params(1.0, 3)};
  for (const auto& p : params)
    for (int i = 0; i < 200; ++i) {
      const double x = -5.0 + 5.95 * i / 199;
      const cplx a = hyp2f1(p, x);
      hyp = std::max(hyp, std::abs(a - hyp2f1_alternate(p, x)) / std::max(1.0, std::abs(a)));
    }
  o.need(hyp <= 1e-10, "2F1 paths");
  const auto verdict = [](int n, double lambda) {
    const MatrixXd pts = sphere::ball_points(n);
    MatC g(pts.cols(), pts.cols());
    for (Index i = 0; i < pts.cols(); ++i)
      for (Index j = 0; j < pts.cols(); ++j) g(i, j) = sphere::r_kernel(lambda, n, pts.col(i), pts.col(j));
    return psd_verdict(g, 1e-8);
  };
  for (auto [n, l] : {std::pair{3, 0.9}, {2, 0.95}, {4, 0.6}})
    o.need(verdict(n, l).psd(), "PSD (" + std::to_string(n) + "," + fmt(l) + ")");
  double worst_neg = -INFINITY;
  for (auto [n, l] : {std::pair{3, 1.3}, {4, 1.4}}) {
    const GramReport r = verdict(n, l);
    o.need(!r.psd(), "NOT_PSD (" + std::to_string(n) + "," + fmt(l) + ")");
    worst_neg = std::max(worst_neg, r.relative_min());
  }
  o.detail = "2F1 max_rel=" + fmt(hyp) + " outside-window min_eig_rel<=" + fmt(worst_neg) +
             (o.ok ? "" : " [" + o.detail + "]");
  return o;
}

Outcome psi_and_constants() {
  Outcome o;
  double herm = 0.0, quad = 0.0, dup = 0.0, min_rel = INFINITY;
  for (auto [n, m] : {std::pair{2, 0.5}, {2, 2.0}, {3, 1.0}}) {
    const MatrixXd pts = sphere::halfsphere_points(n, 30);
    MatC g(30, 30);
    for (Index i = 0; i < 30; ++i)
      for (Index j = 0; j < 30; ++j) g(i, j) = sphere::psi_kernel(m, n, pts.col(i), pts.col(j));
    herm = std::max(herm, hermitian_defect(g));
    const GramReport r = psd_verdict(g, 1e-7);
    min_rel = std::min(min_rel, r.relative_min());
    o.need(r.psd(), "Psi (" + std::to_string(n) + "," + fmt(m) + ")");
  }
  for (int n : {2, 3})
    for (double l : {0.3, 0.7}) {
      const sphere::SphereConstants c = sphere::sphere_constants(l, n);
      quad = std::max(quad, c.quadrature_residual);
      dup = std::max(dup, c.duplication_residual);
    }
  o.need(herm <= 1e-12, "hermiticity");
  o.need(quad <= 1e-8, "d_{lambda,n}");
  o.need(dup <= 1e-12, "duplication");
  o.detail = "herm=" + fmt(herm) + " min_eig_rel=" + fmt(min_rel) + " d residual=" + fmt(quad) +
             " duplication=" + fmt(dup) + (o.ok ? "" : " [" + o.detail + "]");
  return o;
}

Outcome free_fields() {
  using namespace freefield;
  Outcome o;
  const MassMeasure single = MassMeasure::atomic({{1.0, 1.0}});
  const MassMeasure pair = MassMeasure::atomic({{1.0, 1.0}, {2.0, 1.0}});
  double theta = 0.0, ode = 0.0, slope = 0.0, mult_single = 0.0, mult_pair = INFINITY;
  for (const auto& rho : {single, pair})
    for (double t : {0.5, 1.0, 2.0})
      for (double pb : {0.0, 0.7}) theta = std::max(theta, theta_t_check(rho, t, pb).rel_error);
  for (double x : {-2.0, -0.5, 0.5, 1.0, 2.0, 3.0}) ode = std::max(ode, ode_residual(1.0, x) / std::exp(-std::abs(x)));
  RngStream rng(3, 0);
  for (int d : {1, 3})
    for (const auto& rho : {single, pair}) {
      MatrixXd pts(d, 20);
      for (int j = 0; j < 20; ++j) {
        pts(0, j) = rng.uniform(0.05, 3.0);
        for (int i = 1; i < d; ++i) pts(i, j) = rng.uniform(-3.0, 3.0);
      }
      o.need(halfspace_rp_check(rho, d, pts).psd(), "half-space d=" + std::to_string(d));
    }
  for (double s : {0.5, 1.0, 1.5}) {
    const MassMeasure rho = MassMeasure::power_law(s);
    std::vector<double> r, v, dens;
    for (int i = 0; i <= 12; ++i) {
      const double x = std::pow(10.0, -2.0 + 4.0 * i / 12.0);
      r.push_back(x);
      v.push_back(schwinger_2pt(rho, 3, VectorXd::Constant(3, x / std::sqrt(3.0))));
      dens.push_back(theta_density(rho, x));
    }
    slope = std::max({slope, std::abs(loglog_slope(r, dens) - (s - 2.0)), std::abs(loglog_slope(r, v) + 1.0 + s)});
  }
  for (double t : {0.3, 0.7, 1.5})
    for (double s : {0.2, 1.0}) {
      mult_single = std::max(mult_single, multiplicativity_defect(single, t, s, 0.5));
      mult_pair = std::min(mult_pair, multiplicativity_defect(pair, t, s, 0.5));
    }
  o.need(theta <= 1e-7, "Theta_t");
  o.need(ode <= 1e-6, "ODE");
  o.need(slope <= 1e-3, "slopes");
  o.need(mult_single <= 1e-12, "single atom multiplicative");
  o.need(mult_pair > 1e-3, "pair not multiplicative");
  o.detail = "Theta_t=" + fmt(theta) + " ode=" + fmt(ode) + " slope=" + fmt(slope) + " mult(single)=" +
             fmt(mult_single) + " mult(pair)>=" + fmt(mult_pair) + (o.ok ? "" : " [" + o.detail + "]");
  return o;
}

Outcome paths() {
  using namespace ospaths;
  Outcome o;
  const double ou = markov_property_check(ou_covariance(1.0, {0, 0.4, 1.1, 1.5, 2.7, 3.0}), 2).cross_residual;
  const double sq = markov_property_check(sqexp_covariance(1.0, {0, 1, 2}), 1).cross_residual;
  o.need(ou <= 1e-10, "OU Markov");
  o.need(sq > 1e-3, "SQEXP control");
  const GaussianSample gs = sample_gaussian({GaussianSpec::Kind::OU, 1.0, {0, 0.5, 1, 2}, 42}, 100000);
  o.need(gs.max_z <= 5.0, "OU sampling");
  const auto gauss = [](double x) { return std::exp(-x * x / 2) / std::sqrt(2 * std::numbers::pi); };
  const Grid f = Grid::sample(-20, 20, 801, gauss);
  const double comp =
      (heat_semigroup(heat_semigroup(f, 0.3), 0.7).values - heat_semigroup(f, 1.0).values).lpNorm<Eigen::Infinity>();
  const double unit =
      (heat_semigroup(Grid::sample(-20, 20, 801, [](double) { return 1.0; }), 0.3).values.array() - 1.0).abs().maxCoeff();
  o.need(comp <= 1e-8 && unit <= 1e-10, "heat");
  double fk = 0.0;
  fk = std::max(fk, std::abs(feynman_kac_mc(TestFunction::IndicatorPos, 1.0, 0.0, 100000, 7).z_score));
  fk = std::max(fk, std::abs(feynman_kac_mc(TestFunction::Identity, 2.0, 0.7, 100000, 8).z_score));
  fk = std::max(fk, std::abs(feynman_kac_mc(TestFunction::Gaussian, 0.5, 0.5, 100000, 9).z_score));
  o.need(fk <= 3.0, "Feynman-Kac");
  const Grid g = Grid::sample(-12, 12, 481, [](double x) { return std::exp(-x * x / 4); });
  const Grid m = mehler_step(g, 0.5);
  double mehler = 0.0;
  for (Index i = 0; i < g.size(); ++i)
    if (std::abs(g.x(i)) < 6) mehler = std::max(mehler, std::abs(m.values(i) - g.values(i)));
  o.need(mehler <= 1e-8, "Mehler");
  MatrixXd p(3, 3);
  p << 0.5, 0.5, 0, 0.25, 0.5, 0.25, 0, 0.5, 0.5;
  const PssReport pss = pss_axiom_check(MarkovMatrix(p), {1, 2, 5}, 500, 32);
  o.need(pss.min_monomial >= -1e-12, "PSS");
  o.detail = "ou=" + fmt(ou) + " sqexp=" + fmt(sq) + " max_z=" + fmt(gs.max_z) + " heat=" + fmt(comp) +
             "/" + fmt(unit) + " |fk z|=" + fmt(fk) + " mehler=" + fmt(mehler) + " pss min=" +
             fmt(pss.min_monomial) + (o.ok ? "" : " [" + o.detail + "]");
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const app::SuiteReport a = app::run_suite({});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const app::SuiteReport b = app::run_suite({});
  const std::string ja = app::to_json(a, false).dump(), jb = app::to_json(b, false).dump();
  o.need(ja == jb, "reports differ");
  o.need(a.all_pass(), "battery has failures");
  o.need(seconds < 120.0, "battery over budget");
  o.detail = std::to_string(a.scenarios.size()) + " scenarios, " + std::to_string(ja.size()) +
             " bytes identical, battery " + fmt(seconds) + " s" + (o.ok ? "" : " [" + o.detail + "]");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"euclidean green kernel", green_kernel},
      {"periodic green coefficients", periodic_coefficients},
      {"widder interval instances", widder},
      {"OS transform contraction bound", os_bound},
      {"markov equivalence", markov_agreement},
      {"hardy space residues", hardy_residues},
      {"fixed-point reduction", fixed_point},
      {"KMS condition and extension", kms_checks},
      {"matsubara coefficients", matsubara_fft},
      {"hypergeometric and R window", sphere_window},
      {"Psi kernel and sphere constants", psi_and_constants},
      {"free fields", free_fields},
      {"path space", paths},
      {"suite determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("%-4s %2zu %-32s %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
