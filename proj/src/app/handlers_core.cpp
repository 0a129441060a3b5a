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

// Scenario handlers for rphs-core, kernel-lab, dilation and kms.
#include <algorithm>
#include <cmath>

#include "app/handlers.hpp"
#include "oskit/dilation.hpp"
#include "oskit/instances.hpp"
#include "oskit/kernels.hpp"
#include "oskit/kms.hpp"
#include "oskit/rphs.hpp"

namespace oskit::app {
namespace {


// ---- rphs-core ----

void reflection_positive(Context& ctx) {
  const json& p = ctx.payload();
  const MatC theta = complex_matrix(field(p, "theta"));
  const MatC basis = complex_matrix(field(p, "plus_basis"));
  const bool want = expect_psd(p);
  const double tol = ctx.tol("psd", 1e-9);
  const RPSpace space(theta, basis);
  const MatC g = twisted_gram(space);
  ctx.verdict("twisted_gram", check_reflection_positive(space, tol), want, tol);
  if (has(p, "expected_min_eig"))
    ctx.check("min_eig_error", std::abs(hermitian_spectrum(g)(0) - num(p, "expected_min_eig")), Cmp::Le,
              ctx.tol("min_eig", 1e-12));
  ctx.dump_spectrum(g);
  ctx.cite("twisted form <eta, theta eta> >= 0 on E+");
}

void graph_contraction(Context& ctx) {
  const json& p = ctx.payload();
  const int dp = integer(p, "p"), dq = integer(p, "q");
  const std::vector<double> sv = num_list(p, "singular_values");
  RngStream rng(seed(p, "seed", 1), 0x67726170);
  if (dp < 1 || dq < 1) schema_error("p and q must be positive");
  const MatC c = instances::contraction_with_singular_values(dq, dp, sv, rng);
  MatC theta = MatC::Identity(dp + dq, dp + dq);
  theta.bottomRightCorner(dq, dq) *= -1.0;
  MatC f = MatC::Zero(dp + dq, dp), cimg = MatC::Zero(dp + dq, dp);
  f.topRows(dp) = MatC::Identity(dp, dp);
  cimg.bottomRows(dq) = c;
  const GraphSubspace graph = graph_subspace(theta, f, cimg);
  const double norm = spectral_norm(c);
  const double tol = ctx.tol("psd", 1e-9);
  const RPSpace space(theta, graph.plus_basis);
  const GramReport rep = check_reflection_positive(space, tol);
  ctx.check("contraction_norm_error", std::abs(graph.contraction_norm - norm), Cmp::Le, 1e-10);
  ctx.verdict("twisted_gram", rep, norm <= 1.0 + 1e-12, tol);
  ctx.check_true("verdict_matches_norm", rep.psd() == graph.theta_positive);
  // E+ meets Fix(theta) exactly in the graph over ker C.
  const MatC minus_part = (MatC::Identity(dp + dq, dp + dq) - theta) / 2.0 * graph.plus_basis;
  const Index fixed_dim = dp - numerical_rank(minus_part, 1e-10);
  const Index ker_dim = dp - numerical_rank(c, 1e-10);
  ctx.check("fixed_dim_minus_ker_dim", std::abs(static_cast<double>(fixed_dim - ker_dim)), Cmp::Le, 0.0);
  ctx.cite("graph of C is theta-positive iff C is a contraction");
  ctx.cite("E+ intersect Fix(theta) equals the graph over ker C");
}

void os_transform_bound(Context& ctx) {
  const json& p = ctx.payload();
  const int trials = integer(p, "trials", 200);
  const int unitary_trials = integer(p, "unitary_trials", 50);
  RngStream rng(seed(p, "seed", 7), 0x6f73);
  double worst_excess = -INFINITY, worst_commute = 0.0, worst_herm = 0.0, worst_square = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index dp = 1 + static_cast<Index>(rng.below(4)), dq = 1 + static_cast<Index>(rng.below(4));
    std::vector<double> sv(std::min(dp, dq));
    for (auto& s : sv) s = rng.uniform() < 0.25 ? 1.0 : rng.uniform(0.0, 1.0);
    const auto inst = instances::graph_instance(dp, dq, sv, rng);
    const MatC s = instances::random_theta_symmetric(inst.space, rng);
    const OSQuotient q = os_quotient(inst.space);
    if (q.rank == 0) continue;
    const MatC hat = os_transform(inst.space, q, s);
    worst_excess = std::max(worst_excess, spectral_norm(hat) - restricted_norm(inst.space, s));
    worst_commute = std::max(worst_commute, (hat * q.qmap - q.qmap * s).norm());
    worst_herm = std::max(worst_herm, (hat - hat.adjoint()).norm());
  }
  for (int t = 0; t < unitary_trials; ++t) {
    const auto inst = instances::twisted_unitary_instance(rng);
    const OSQuotient q = os_quotient(inst.space);
    if (q.rank == 0) continue;
    const MatC hat = os_transform(inst.space, q, inst.coords);
    worst_square = std::max(worst_square, (hat * hat - MatC::Identity(q.rank, q.rank)).norm());
  }
  ctx.check("norm_excess", worst_excess, Cmp::Le, ctx.tol("norm", 1e-10));
  ctx.check("intertwining_residual", worst_commute, Cmp::Le, ctx.tol("intertwine", 1e-9));
  ctx.check("hermitian_defect", worst_herm, Cmp::Le, ctx.tol("hermitian", 1e-9));
  ctx.check("unitary_square_residual", worst_square, Cmp::Le, ctx.tol("square", 1e-9));
  ctx.cite("theta-symmetric S: ||S_hat|| <= ||S||");
  ctx.cite("theta U theta = U^{-1}, U E+ = E+: U_hat^2 = 1");
}

void markov_equivalence(Context& ctx) {
  const json& p = ctx.payload();
  const int trials = integer(p, "trials", 100);
  const double tol = ctx.tol("markov", 1e-9);
  RngStream rng(seed(p, "seed", 11), 0x6d6b76);
  int disagree = 0, wrong = 0, markov = 0;
  for (int t = 0; t < trials; ++t) {
    const auto inst = instances::markov_instance(rng);
    const MarkovReport r = markov_check(inst.graph.space, inst.graph.e0_basis, tol);
    if (!r.criteria_agree) ++disagree;
    if (r.is_markov != inst.expected_markov) ++wrong;
    if (r.is_markov) ++markov;
  }
  ctx.check("criteria_disagreements", disagree, Cmp::Le, 0.0);
  ctx.check("wrong_classifications", wrong, Cmp::Le, 0.0);
  ctx.check("markov_instances", markov, Cmp::Ge, 1.0);
  ctx.check("non_markov_instances", trials - markov, Cmp::Ge, 1.0);
  ctx.cite("P+ P0 P- = P+ P- iff q(E0) = E_hat");
}

// ---- kernel-lab ----

void gram_psd(Context& ctx) {
  const json& p = ctx.payload();
  const KernelSpec k = kernel_spec(field(p, "kernel"));
  const MatC g = gram(k, k.family == KernelFamily::Custom
                             ? Eigen::MatrixXd::Zero(1, k.samples.rows())
                             : points(p, k.point_dim()));
  const double tol = ctx.tol("psd", 1e-10);
  ctx.verdict("gram", psd_verdict(g, tol), expect_psd(p), tol);
  ctx.dump_spectrum(g);
  ctx.note("kernel", std::string(family_name(k.family)));
  ctx.note("convention", "nu_m density (1/pi) / (m^2 + p^2)");
  ctx.cite("Gram matrix (K(x_i, x_j)) of a positive definite kernel");
}

void reflected(Context& ctx) {
  const json& p = ctx.payload();
  const KernelSpec k = kernel_spec(field(p, "kernel"));
  const ReflectionGeometry geo = geometry(field(p, "geometry"));
  const Eigen::MatrixXd pts = points(p, k.point_dim());
  const MatC g = reflected_gram(k, geo, pts);
  const double tol = ctx.tol("psd", 1e-10);
  ctx.verdict("reflected_gram", psd_verdict(g, tol), expect_psd(p), tol);
  const GeometryCheck gc = check_geometry(geo, pts);
  ctx.check("involution_residual", gc.involution_residual, Cmp::Le, 1e-12);
  ctx.check_true("tau_leaves_plus", gc.tau_leaves_plus);
  if (flag(p, "rank_one", false)) {
    const Eigen::VectorXd s = singular_values(g);
    ctx.check("second_singular_ratio", s.size() > 1 ? s(1) / s(0) : 0.0, Cmp::Le, ctx.tol("rank", 1e-10));
  }
  ctx.dump_spectrum(g);
  ctx.note("geometry", std::string(geometry_name(geo.tag)));
  ctx.cite("reflected kernel K(x, tau y) on the positive region");
}

void periodic_fourier(Context& ctx) {
  const json& p = ctx.payload();
  const FourierCoefficients fc =
      periodic_fourier_coefficients(num(p, "lambda"), num(p, "beta"), integer(p, "n_max", 64));
  ctx.check("max_rel_error", fc.max_rel_error, Cmp::Le, ctx.tol("coefficients", 1e-8));
  ctx.check("min_coefficient", fc.min_coefficient, Cmp::Ge, 0.0);
  double asym = 0.0;
  const std::size_t m = fc.n.size();
  for (std::size_t i = 0; i < m; ++i) asym = std::max(asym, std::abs(fc.closed_form[i] - fc.closed_form[m - 1 - i]));
  ctx.check("even_in_n", asym, Cmp::Le, 0.0);
  ctx.note("quadrature_nodes", std::to_string(fc.nodes));
  ctx.dump(fc.closed_form);
  ctx.cite("c_n = 2 beta lambda (1 - e^{-beta lambda}) / ((lambda beta)^2 + (2 pi n)^2)");
}

void interval_rp(Context& ctx) {
  const json& p = ctx.payload();
  SpectralMeasure mu = spectral_measure(field(p, "measure"));
  const double a = num(p, "a");
  const double tol = ctx.tol("psd", 1e-8);
  const IntervalReport r = interval_rp_check(mu, a, integer(p, "grid", 24), tol);
  const std::string group = has(p, "expect") ? str(field(p, "expect"), "group", "PSD") : "PSD";
  const std::string semi = has(p, "expect") ? str(field(p, "expect"), "semigroup", "PSD") : "PSD";
  if (group == "NOT_PSD")
    ctx.check("group_min_eig", r.group_kernel.min_eig, Cmp::Lt, -ctx.tol("not_psd_margin", 1e-6));
  else
    ctx.verdict("group", r.group_kernel, true, tol);
  if (semi != "ANY") ctx.verdict("semigroup", r.semigroup_kernel, semi == "PSD", tol);
  ctx.check_true("slope_prediction_consistent", r.prediction_consistent);
  ctx.note("widder_slope", std::to_string(r.widder_slope));
  ctx.cite("kernels phi((t - s)/2) on (-a, a) and phi((t + s)/2) on (0, a)");
  ctx.cite("left derivative of L(mu) at a <= 0 is sufficient");
}

// ---- dilation ----

std::vector<double> times_from(const json& p) {
  if (has(p, "times")) return num_list(p, "times");
  const json& r = field(p, "random_times");
  RngStream rng(seed(r, "seed", 3), 0x746d);
  std::vector<double> t(integer(r, "count"));
  for (auto& x : t) x = rng.uniform(0.0, num(r, "hi", 5.0));
  return t;
}

void rp_function_check(Context& ctx) {
  const json& p = ctx.payload();
  const SpectralMeasure q = spectral_measure(field(p, "measure"));
  const std::vector<double> t = times_from(p);
  const Index b = q.block(), n = static_cast<Index>(t.size());
  MatC group(n * b, n * b), semi(n * b, n * b);
  double sym = 0.0;
  for (Index i = 0; i < n; ++i) {
    const MatC plus = rp_function(q, t[i]), minus = rp_function(q, -t[i]);
    sym = std::max({sym, (plus - minus).norm(), (plus - plus.adjoint()).norm()});
    for (Index j = 0; j < n; ++j) {
      group.block(i * b, j * b, b, b) = rp_function(q, t[i] - t[j]);
      semi.block(i * b, j * b, b, b) = rp_function(q, t[i] + t[j]);
    }
  }
  const double tol = ctx.tol("psd", 1e-9);
  ctx.check("symmetry_residual", sym, Cmp::Le, 0.0);
  ctx.verdict("group", psd_verdict(group, tol), true, tol);
  ctx.verdict("semigroup", psd_verdict(semi, tol), true, tol);
  ctx.dump_spectrum(semi);
  ctx.cite("phi(t) = int e^{-lambda |t|} dQ(lambda)");
}

void pairing(Context& ctx) {
  const json& p = ctx.payload();
  const HermitianSemigroup h{num_list(p, "eigs")};
  const VecC xi = complex_vector(field(p, "xi"));
  const VecC eta = has(p, "eta") ? complex_vector(field(p, "eta")) : xi;
  double worst = 0.0, semigroup = 0.0;
  bool skipped = false;
  for (double t : num_list(p, "times")) {
    const PairingResult r = dilation_pairing(h, xi, eta, t);
    worst = std::max(worst, r.rel_discrepancy);
    skipped = skipped || !r.skipped.empty();
  }
  const PairingResult at0 = dilation_pairing(h, xi, eta, 0.0);
  ctx.check("max_rel_discrepancy", worst, Cmp::Le, ctx.tol("quadrature", 1e-6));
  ctx.check("isometry_residual", std::abs(at0.closed_form - xi.dot(eta)), Cmp::Le, 1e-12);
  // C_t C_s = C_{t+s} per eigenvalue.
  for (double hi : h.eigs)
    semigroup = std::max(semigroup, std::abs(std::exp(-0.3 * hi) * std::exp(-0.7 * hi) - std::exp(-hi)));
  ctx.check("semigroup_residual", semigroup, Cmp::Le, 1e-15);
  if (skipped) ctx.note("ZERO_EIGENVALUE_QUADRATURE", "quadrature skipped for h = 0 components");
  ctx.cite("(1/pi) int conj(j xi) e^{itp} j eta dp = <xi, C_|t| eta>");
}

void hardy(Context& ctx) {
  const json& p = ctx.payload();
  const HermitianSemigroup h{num_list(p, "eigs")};
  const VecC xi = complex_vector(field(p, "xi"));
  const VecC z = complex_vector(field(p, "points"));
  const Index n = z.size();
  MatC gram_res(n, n);
  double worst = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const HardyResult r = hardy_twisted_inner(h, z(i), z(j), xi, xi);
      gram_res(i, j) = r.residue_value;
      worst = std::max(worst, r.rel_discrepancy);
    }
  const double tol = ctx.tol("psd", 1e-9);
  ctx.check("max_rel_discrepancy", worst, Cmp::Le, ctx.tol("quadrature", 1e-6));
  ctx.verdict("twisted_gram", psd_verdict(gram_res, tol, 1e-10), true, tol);
  ctx.dump_spectrum(gram_res);
  ctx.cite("<f_z, theta f_w> = 4 pi <H^{1/2}(H + conj z)^{-1} xi, H^{1/2}(H + conj w)^{-1} eta>");
}

void projection(Context& ctx) {
  const json& p = ctx.payload();
  const ProjectionModel m = spectral_projection_model(spectral_measure(field(p, "measure")));
  const double horizon = num(p, "horizon", 1e3);
  const double avg = m.cesaro(horizon);
  ctx.check("cesaro_gap", std::abs(avg - m.ergodic_limit()), Cmp::Le, ctx.tol("cesaro", 1e-2));
  ctx.check("cesaro_quadrature_error", std::abs(avg - m.cesaro_quadrature(horizon)), Cmp::Le, 1e-10);
  if (has(p, "expected_limit"))
    ctx.check("limit_error", std::abs(m.ergodic_limit() - num(p, "expected_limit")), Cmp::Le, 1e-15);
  ctx.cite("(1/T) int_0^T phi -> rho({0}): fixed points survive reduction");
}

// ---- kms ----

std::vector<kms::PlusAtom> plus_atoms(const json& p) {
  std::vector<kms::PlusAtom> atoms;
  if (has(p, "plus_atoms")) {
    for (const auto& a : field(p, "plus_atoms")) {
      const json& w = field(a, "weight");
      atoms.push_back({num(a, "loc"), w.is_array() && !w.empty() && w[0].is_array()
                                          ? complex_matrix(w)
                                          : MatC::Constant(1, 1, complex_value(w))});
    }
    return atoms;
  }
  const json& r = field(p, "random");
  RngStream rng(seed(r, "seed", 5), 0x6b6d73);
  const int block = integer(r, "block", 2);
  for (int k = 0; k < integer(r, "atoms", 3); ++k) {
    const MatC a = instances::random_complex(block, block, rng);
    atoms.push_back({rng.uniform(0.0, 3.0), a * a.adjoint()});
  }
  return atoms;
}

void kms_condition(Context& ctx) {
  const json& p = ctx.payload();
  const kms::KMSMeasure mu(num(p, "beta"), plus_atoms(p));
  RngStream rng(seed(p, "seed", 9), 0x74);
  std::vector<double> times(integer(p, "samples", 32));
  for (auto& t : times) t = rng.uniform(-5.0, 5.0);
  ctx.check("kms_residual", kms::kms_residual(mu, times), Cmp::Le, ctx.tol("kms", 1e-12));
  ctx.check("modular_residual", mu.modular_residual(), Cmp::Le, 1e-14);
  const Index b = mu.block(), n = static_cast<Index>(times.size());
  MatC g(n * b, n * b);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g.block(i * b, j * b, b, b) = kms::kms_function(mu, cplx(times[i] - times[j], 0.0));
  const double tol = ctx.tol("psd", 1e-9);
  ctx.verdict("real_line_gram", psd_verdict(g, tol, 1e-10), true, tol);
  ctx.cite("psi(i beta + t) = conj psi(t)");
  ctx.cite("d mu(-lambda) = e^{-beta lambda} d conj mu(lambda)");
}

Eigen::MatrixXd skew_input(const json& p) {
  if (has(p, "c")) return real_matrix(field(p, "c"));
  const double mu = num(p, "modulus");
  const int pairs = integer(p, "pairs", 1);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(2 * pairs, 2 * pairs);
  for (int k = 0; k < pairs; ++k) {
    c(2 * k, 2 * k + 1) = -mu;
    c(2 * k + 1, 2 * k) = mu;
  }
  if (has(p, "rotate_seed")) {
    RngStream rng(seed(p, "rotate_seed", 0), 0x726f74);
    const Eigen::MatrixXd o = instances::random_orthogonal(2 * pairs, rng);
    c = o * c * o.transpose();
  }
  return c;
}

void extension(Context& ctx) {
  const json& p = ctx.payload();
  const double beta = num(p, "beta");
  const auto c = kms::SkewContraction::from(skew_input(p));
  const auto grid = kms::half_period_grid(beta, integer(p, "grid", 16));
  const bool flip = flag(p, "flip_odd", false);
  const double tol = ctx.tol("psd", 1e-8);
  const kms::ExtensionReport r = kms::rp_extension_check(c, beta, grid, tol, flip);
  if (flip) {
    ctx.verdict("group", r.group_pd, false, tol);
    ctx.note("reflected_verdict", std::string(verdict_name(r.reflected_pd.verdict)));
  } else {
    ctx.verdict("group", r.group_pd, true, tol);
    ctx.verdict("reflected", r.reflected_pd, true, tol);
  }
  const MatC phi0 = kms::phi_from_contraction(c, beta, 0.0), phib = kms::phi_from_contraction(c, beta, beta);
  ctx.check("endpoint_residual", (phib - phi0.conjugate()).norm(), Cmp::Le, 1e-12);
  ctx.note("contraction_margin", std::to_string(1.0 - c.norm));
  ctx.cite("f(t, e) = u+ + u-, f(t, tau) = u+ + iI u-");
  ctx.cite("(1 + iC)^{1 - t/beta} (1 - iC)^{t/beta}");
}

void matsubara(Context& ctx) {
  const json& p = ctx.payload();
  const double lambda = num(p, "lambda"), beta = num(p, "beta");
  const kms::MatsubaraResult r = kms::matsubara(lambda, beta, integer(p, "n_max", 32));
  ctx.check("fft_check", r.fft_check, Cmp::Le, ctx.tol("fft", 1e-6));
  ctx.check("c_minus_error", std::abs(r.c_minus - 2.0 * lambda / beta), Cmp::Le, 1e-15);
  double asym = 0.0;
  for (std::size_t i = 0; i < r.n.size(); ++i)
    asym = std::max(asym, std::abs(r.closed_form[i] - r.closed_form[r.n.size() - 1 - i]));
  ctx.check("even_in_n", asym, Cmp::Le, 0.0);
  ctx.note("raw_dft_check", std::to_string(r.raw_dft_check));
  ctx.dump(r.closed_form);
  ctx.cite("c_2n = c+ / (lambda^2 + (2 n pi / beta)^2), c+ = tanh(beta lambda / 2) 2 lambda / beta");
}

void standard_subspace(Context& ctx) {
  const json& p = ctx.payload();
  kms::StandardSubspaceModel model{num_list(p, "delta"), int_list(p, "pairing")};
  const kms::RoundtripResult r = kms::standard_subspace_roundtrip(model);
  const Index d = static_cast<Index>(model.delta.size());
  ctx.check("im_residual", r.im_residual, Cmp::Le, ctx.tol("roundtrip", 1e-10));
  ctx.check("skew_residual", r.skew_residual, Cmp::Le, 1e-12);
  ctx.check("contraction_norm", r.contraction.norm, Cmp::Lt, 1.0);
  ctx.check("real_rank_deficit", static_cast<double>(2 * d - r.real_rank), Cmp::Le, 0.0);
  if (has(p, "expected_norm"))
    ctx.check("norm_error", std::abs(r.contraction.norm - num(p, "expected_norm")), Cmp::Le, 1e-12);
  double pairing_err = 0.0;
  for (double t : {0.0, 0.25, 0.5, 1.0}) {
    const MatC lhs = kms::modular_pairing(model, r.basis, 1.0, t);
    pairing_err = std::max(pairing_err, (lhs - kms::phi_from_contraction(r.contraction, 1.0, t)).norm());
  }
  ctx.check("modular_pairing_residual", pairing_err, Cmp::Le, 1e-10);
  ctx.cite("Im <xi, eta> = <xi, C eta>_V on V = Fix(J Delta^{1/2})");
}

}  // namespace

void register_core(HandlerTable& t) {
  t[{"rphs-core", "reflection_positive"}] = reflection_positive;
  t[{"rphs-core", "graph_contraction"}] = graph_contraction;
  t[{"rphs-core", "os_transform_bound"}] = os_transform_bound;
  t[{"rphs-core", "markov_equivalence"}] = markov_equivalence;
  t[{"kernel-lab", "gram_psd"}] = gram_psd;
  t[{"kernel-lab", "reflected_gram"}] = reflected;
  t[{"kernel-lab", "periodic_fourier"}] = periodic_fourier;
  t[{"kernel-lab", "interval_rp"}] = interval_rp;
  t[{"dilation", "rp_function"}] = rp_function_check;
  t[{"dilation", "pairing"}] = pairing;
  t[{"dilation", "hardy"}] = hardy;
  t[{"dilation", "projection"}] = projection;
  t[{"kms", "kms_condition"}] = kms_condition;
  t[{"kms", "extension"}] = extension;
  t[{"kms", "matsubara"}] = matsubara;
  t[{"kms", "standard_subspace"}] = standard_subspace;
}

}  // namespace oskit::app
