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

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <string_view>

#include "oskit/error.hpp"

namespace oskit {

using cplx = std::complex<double>;
using Eigen::Index;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatC = Mat<cplx>;
using VecC = Vec<cplx>;

enum class Verdict { Psd, NotPsd };

std::string_view verdict_name(Verdict v);

struct GramReport {
  Index size = 0;
  double min_eig = 0.0;
  double max_eig = 0.0;
  double tol = 0.0;
  Verdict verdict = Verdict::Psd;

  bool psd() const { return verdict == Verdict::Psd; }
  // min_eig measured against the scale used by the verdict.
  double relative_min() const { return min_eig / std::max(1.0, max_eig); }
};

// Verdict rule: PSD iff min_eig >= -tol * max(1, max_eig).
GramReport classify_spectrum(const Eigen::VectorXd& ascending_eigs, double tol);

template <class Derived>
double hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
  const double scale = m.norm();
  if (scale == 0.0) return 0.0;
  return (m - m.adjoint()).norm() / scale;
}

// Ascending eigenvalues of the hermitian part of m.
template <class Derived>
Eigen::VectorXd hermitian_spectrum(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Mat<Scalar> sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat<Scalar>> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

template <class Derived>
GramReport psd_verdict(const Eigen::MatrixBase<Derived>& m, double tol,
                       double hermitian_tol = 1e-12) {
  require(m.rows() == m.cols(), Errc::NotHermitian, "matrix is not square");
  const double defect = hermitian_defect(m);
  require(defect <= hermitian_tol, Errc::NotHermitian,
          "relative hermitian defect " + std::to_string(defect));
  return classify_spectrum(hermitian_spectrum(m), tol);
}

// f applied to a hermitian matrix through its eigendecomposition.
template <class Scalar, class F>
Mat<Scalar> hermitian_apply(const Mat<Scalar>& h, F&& f) {
  Eigen::SelfAdjointEigenSolver<Mat<Scalar>> es((h + h.adjoint()) / 2.0);
  const auto& vals = es.eigenvalues();
  Vec<Scalar> mapped(vals.size());
  for (Index i = 0; i < vals.size(); ++i) mapped(i) = f(vals(i));
  return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint();
}

template <class Derived>
Eigen::VectorXd singular_values(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.size() == 0) return Eigen::VectorXd();
  Eigen::JacobiSVD<Mat<Scalar>> svd(m.eval());
  return svd.singularValues();
}

template <class Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::VectorXd s = singular_values(m);
  return s.size() ? s(0) : 0.0;
}

// Number of singular values above rel * largest.
template <class Derived>
Index numerical_rank(const Eigen::MatrixBase<Derived>& m, double rel) {
  const Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  return (s.array() > rel * s(0)).count();
}

// Orthonormal basis of the column span, rank cut at rel * largest singular value.
template <class Scalar>
Mat<Scalar> orthonormal_range(const Mat<Scalar>& m, double rel = 1e-10) {
  if (m.cols() == 0) return Mat<Scalar>(m.rows(), 0);
  Eigen::JacobiSVD<Mat<Scalar>> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Index r = 0;
  while (r < s.size() && s(r) > rel * std::max(s(0), 1e-300)) ++r;
  return svd.matrixU().leftCols(r);
}

// Orthonormal basis of the null space, same rank rule.
template <class Scalar>
Mat<Scalar> orthonormal_kernel(const Mat<Scalar>& m, double rel = 1e-10) {
  Eigen::JacobiSVD<Mat<Scalar>> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Index r = 0;
  while (r < s.size() && s(r) > rel * std::max(s(0), 1e-300)) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

// Orthogonal projector onto the span of an orthonormal set of columns.
template <class Scalar>
Mat<Scalar> projector(const Mat<Scalar>& orthonormal_columns) {
  return orthonormal_columns * orthonormal_columns.adjoint();
}

}  // namespace oskit
