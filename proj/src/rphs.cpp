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

#include "oskit/rphs.hpp"

#include <string>

namespace oskit {

namespace {

MatC identity(Index n) { return MatC::Identity(n, n); }

// Upper factor of a thin QR; B = Q R with R invertible for full-rank B.
MatC upper_factor(const MatC& b) {
  Eigen::HouseholderQR<MatC> qr(b);
  return qr.matrixQR().topRows(b.cols()).triangularView<Eigen::Upper>();
}

}  // namespace

RPSpace::RPSpace(MatC theta, MatC plus_basis)
    : theta_(std::move(theta)), plus_basis_(std::move(plus_basis)) {
  const Index d = theta_.rows();
  require(theta_.cols() == d && plus_basis_.rows() == d, Errc::DomainViolation,
          "theta must be square and match the basis rows");
  const double scale = 1e-12 * std::max<double>(1.0, static_cast<double>(d));
  const double unitary_defect = (theta_.adjoint() * theta_ - identity(d)).norm();
  const double involution_defect = (theta_ * theta_ - identity(d)).norm();
  require(unitary_defect <= scale && involution_defect <= scale, Errc::NonInvolutiveTheta,
          "theta defects " + std::to_string(unitary_defect) + ", " +
              std::to_string(involution_defect));
  const Eigen::VectorXd s = singular_values(plus_basis_);
  require(s.size() == plus_basis_.cols() && s.size() > 0 && s(s.size() - 1) > 1e-10 * s(0),
          Errc::RankDeficientBasis, "plus_basis does not have full column rank");
}

ThetaEigenspaces theta_eigenspaces(const MatC& theta) {
  const MatC id = identity(theta.rows());
  return {orthonormal_range<cplx>((id + theta) / 2.0), orthonormal_range<cplx>((id - theta) / 2.0)};
}

MatC twisted_gram(const RPSpace& space) {
  const MatC& b = space.plus_basis();
  MatC g = b.adjoint() * space.theta() * b;
  return (g + g.adjoint()) / 2.0;
}

GramReport check_reflection_positive(const RPSpace& space, double tol) {
  return psd_verdict(twisted_gram(space), tol);
}

GraphSubspace graph_subspace(const MatC& theta, const MatC& f_basis, const MatC& c_images) {
  require(f_basis.rows() == theta.rows() && c_images.rows() == theta.rows() &&
              c_images.cols() == f_basis.cols(),
          Errc::DomainViolation, "graph_subspace shapes do not match");
  const double f_defect = ((theta - identity(theta.rows())) * f_basis).norm();
  const double c_defect = ((theta + identity(theta.rows())) * c_images).norm();
  require(f_defect <= 1e-10 * std::max(1.0, f_basis.norm()) &&
              c_defect <= 1e-10 * std::max(1.0, c_images.norm()),
          Errc::EigenspaceMismatch, "inputs are not in the stated theta eigenspaces");
  const MatC r = upper_factor(f_basis);
  MatC c_ortho = c_images;
  r.triangularView<Eigen::Upper>().solveInPlace<Eigen::OnTheRight>(c_ortho);
  GraphSubspace out;
  out.plus_basis = f_basis + c_images;
  out.contraction_norm = spectral_norm(c_ortho);
  out.theta_positive = out.contraction_norm <= 1.0 + 1e-12;
  return out;
}

OSQuotient os_quotient(const RPSpace& space, double tol) {
  const MatC g = twisted_gram(space);
  const GramReport report = psd_verdict(g, tol);
  require(report.psd(), Errc::NotRp,
          "twisted Gram has min eigenvalue " + std::to_string(report.min_eig));
  Eigen::SelfAdjointEigenSolver<MatC> es(g);
  const Eigen::VectorXd& vals = es.eigenvalues();
  const MatC& vecs = es.eigenvectors();
  // Measure twisted norms against ambient norms so a quotient that vanishes
  // entirely (e.g. the graph of an isometry) is not rebuilt from roundoff.
  const double ambient = spectral_norm(space.plus_basis());
  const double cut = tol * std::max(vals.maxCoeff(), ambient * ambient);
  const Index k = g.rows();
  Index nulls = 0;
  while (nulls < k && vals(nulls) <= cut) ++nulls;

  OSQuotient q;
  q.tol = tol;
  q.rank = k - nulls;
  q.null_basis = vecs.leftCols(nulls);
  q.qmap.resize(q.rank, k);
  q.lift.resize(k, q.rank);
  for (Index i = 0; i < q.rank; ++i) {
    const double root = std::sqrt(vals(nulls + i));
    q.qmap.row(i) = root * vecs.col(nulls + i).adjoint();
    q.lift.col(i) = vecs.col(nulls + i) / root;
  }
  return q;
}

MatC os_transform(const RPSpace& space, const OSQuotient& quotient, const MatC& s) {
  require(s.rows() == space.k() && s.cols() == space.k(), Errc::DomainViolation,
          "operator must act on E+ coordinates");
  if (quotient.null_basis.cols() > 0) {
    const double leak = (quotient.qmap * s * quotient.null_basis).norm();
    const double scale = std::max(1.0, spectral_norm(quotient.qmap) * spectral_norm(s));
    require(leak <= 10.0 * quotient.tol * scale, Errc::NullspaceNotPreserved,
            "S moves the null space by " + std::to_string(leak));
  }
  return quotient.qmap * s * quotient.lift;
}

double restricted_norm(const RPSpace& space, const MatC& s) {
  const MatC r = upper_factor(space.plus_basis());
  MatC conj = r * s;
  r.triangularView<Eigen::Upper>().solveInPlace<Eigen::OnTheRight>(conj);
  return spectral_norm(conj);
}

double theta_symmetry_defect(const RPSpace& space, const MatC& s) {
  const MatC g = twisted_gram(space);
  const MatC lhs = s.adjoint() * g;
  return (lhs - g * s).norm() / std::max(1e-300, lhs.norm() + (g * s).norm());
}

MarkovReport markov_check(const RPSpace& space, const MatC& e0_basis, double tol) {
  const MatC& theta = space.theta();
  const MatC& b = space.plus_basis();
  const Index d = space.dim();
  require(e0_basis.rows() == d, Errc::DomainViolation, "e0 basis has the wrong ambient size");
  const MatC p_plus = projector<cplx>(orthonormal_range<cplx>(b));
  const double scale = std::max(1.0, e0_basis.norm());
  require(((theta - identity(d)) * e0_basis).norm() <= 1e-10 * scale, Errc::E0NotFixed,
          "theta does not fix the E0 basis");
  require(((identity(d) - p_plus) * e0_basis).norm() <= 1e-10 * scale, Errc::E0NotFixed,
          "E0 basis is not contained in E+");

  const MatC p_minus = projector<cplx>(orthonormal_range<cplx>(MatC(theta * b)));
  const MatC p_zero = e0_basis.cols() ? projector<cplx>(orthonormal_range<cplx>(e0_basis))
                                      : MatC::Zero(d, d);
  MarkovReport out;
  out.projector_residual = spectral_norm(p_plus * p_zero * p_minus - p_plus * p_minus);
  out.projector_holds = out.projector_residual <= 10.0 * tol;

  const OSQuotient q = os_quotient(space, tol);
  Index image_rank = 0;
  if (e0_basis.cols() > 0) {
    const MatC coords = b.colPivHouseholderQr().solve(e0_basis);
    image_rank = q.rank ? numerical_rank(MatC(q.qmap * coords), 1e-8) : 0;
  }
  out.quotient_defect = q.rank - image_rank;
  out.is_markov = out.projector_holds && out.quotient_defect == 0;
  out.criteria_agree = out.projector_holds == (out.quotient_defect == 0);
  return out;
}

}  // namespace oskit
