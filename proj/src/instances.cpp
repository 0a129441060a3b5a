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

#include "oskit/instances.hpp"

namespace oskit::instances {

MatC random_complex(Index rows, Index cols, RngStream& rng) {
  MatC m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = cplx(rng.normal(), rng.normal());
  return m;
}

MatC random_unitary(Index n, RngStream& rng) {
  Eigen::HouseholderQR<MatC> qr(random_complex(n, n, rng));
  return qr.householderQ() * MatC::Identity(n, n);
}

MatC random_hermitian(Index n, RngStream& rng) {
  const MatC a = random_complex(n, n, rng);
  return (a + a.adjoint()) / 2.0;
}

Eigen::MatrixXd random_orthogonal(Index n, RngStream& rng) {
  Eigen::MatrixXd a(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) a(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
}

MatC contraction_with_singular_values(Index q, Index p, const std::vector<double>& sv,
                                      RngStream& rng) {
  MatC d = MatC::Zero(q, p);
  for (Index i = 0; i < std::min<Index>({q, p, static_cast<Index>(sv.size())}); ++i) d(i, i) = sv[i];
  return random_unitary(q, rng) * d * random_unitary(p, rng);
}

namespace {

MatC block_diag(const MatC& a, const MatC& b) {
  MatC m = MatC::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

MatC reflection(Index p, Index q) {
  return block_diag(MatC::Identity(p, p), -MatC::Identity(q, q));
}

MatC random_invertible(Index k, RngStream& rng) {
  // Unitary times a well-conditioned positive diagonal.
  MatC t = random_unitary(k, rng);
  for (Index j = 0; j < k; ++j) t.col(j) *= rng.uniform(0.5, 2.0);
  return t;
}

}  // namespace

GraphInstance graph_instance(Index p, Index q, const std::vector<double>& sv, RngStream& rng,
                             bool scramble_basis) {
  const MatC c = contraction_with_singular_values(q, p, sv, rng);
  MatC basis(p + q, p);
  basis << MatC::Identity(p, p), c;
  const MatC ker = orthonormal_kernel<cplx>(c, 1e-12);
  MatC e0 = MatC::Zero(p + q, ker.cols());
  e0.topRows(p) = ker;

  const MatC w = random_unitary(p + q, rng);
  const MatC theta = w * reflection(p, q) * w.adjoint();
  MatC plus = w * basis;
  if (scramble_basis) plus = plus * random_invertible(p, rng);
  return {RPSpace(theta, plus), c, w * e0};
}

MatC random_theta_symmetric(const RPSpace& space, RngStream& rng) {
  // S = H G + a 1 gives G S = G H G + a G hermitian and S N = a N.
  const MatC g = twisted_gram(space);
  const MatC h = random_hermitian(space.k(), rng);
  return h * g / std::max(1.0, spectral_norm(g)) + rng.uniform(-1.0, 1.0) * MatC::Identity(space.k(), space.k());
}

TwistedUnitary twisted_unitary_instance(RngStream& rng) {
  // Block a: theta-commuting involution diag(R1, R2) that preserves the graph
  // of C = V2 D V1*, R_i = V_i diag(s) V_i*.
  const Index p = 1 + static_cast<Index>(rng.below(3));
  std::vector<double> sv(p);
  for (auto& s : sv) s = rng.uniform(0.0, 1.0);
  const MatC v1 = random_unitary(p, rng), v2 = random_unitary(p, rng);
  MatC d = MatC::Zero(p, p), signs = MatC::Zero(p, p);
  for (Index i = 0; i < p; ++i) {
    d(i, i) = sv[i];
    signs(i, i) = rng.uniform() < 0.5 ? -1.0 : 1.0;
  }
  const MatC c = v2 * d * v1.adjoint();
  const MatC ua = block_diag(v1 * signs * v1.adjoint(), v2 * signs * v2.adjoint());
  MatC basis_a(2 * p, p);
  basis_a << MatC::Identity(p, p), c;

  // Block b: boost exp(iA) with A anticommuting with theta; E+ is a spectral
  // subspace of A, which carries a null twisted form.
  const Index r = 1 + static_cast<Index>(rng.below(2));
  const MatC x = random_complex(r, r, rng) * 0.5;
  MatC a = MatC::Zero(2 * r, 2 * r);
  a.topRightCorner(r, r) = x;
  a.bottomLeftCorner(r, r) = x.adjoint();
  Eigen::SelfAdjointEigenSolver<MatC> es(a);
  const MatC ub = hermitian_apply<cplx>(a, [](double v) { return std::exp(cplx(0.0, v)); });
  const MatC basis_b = es.eigenvectors().rightCols(r);

  const MatC theta0 = block_diag(reflection(p, p), reflection(r, r));
  const MatC u0 = block_diag(ua, ub);
  const MatC basis0 = block_diag(basis_a, basis_b);

  const MatC w = random_unitary(theta0.rows(), rng);
  const MatC t = random_invertible(basis0.cols(), rng);
  const MatC theta = w * theta0 * w.adjoint();
  const MatC u = w * u0 * w.adjoint();
  const MatC plus = w * basis0 * t;
  const MatC coords = plus.colPivHouseholderQr().solve(MatC(u * plus));
  return {RPSpace(theta, plus), u, coords};
}

MarkovInstance markov_instance(RngStream& rng) {
  const Index p = 1 + static_cast<Index>(rng.below(4));
  const Index q = 1 + static_cast<Index>(rng.below(4));
  const Index m = std::min(p, q);
  std::vector<double> sv(m);
  const auto kind = rng.below(3);
  bool markov = true;
  for (auto& s : sv) {
    const double u = rng.uniform();
    if (u < 0.3) {
      s = 0.0;
    } else if (kind == 0 || u < 0.6) {
      s = 1.0;
    } else {
      s = rng.uniform(0.05, 0.95);
      markov = false;
    }
  }
  return {graph_instance(p, q, sv, rng), markov};
}

}  // namespace oskit::instances
