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

#include <vector>

#include "oskit/rng.hpp"
#include "oskit/rphs.hpp"

// Seeded random reflection-positive instances for property checks.
namespace oskit::instances {

MatC random_complex(Index rows, Index cols, RngStream& rng);
MatC random_unitary(Index n, RngStream& rng);
MatC random_hermitian(Index n, RngStream& rng);
Eigen::MatrixXd random_orthogonal(Index n, RngStream& rng);

// C: C^p -> C^q with the given singular values (padded with zeros).
MatC contraction_with_singular_values(Index q, Index p, const std::vector<double>& sv,
                                      RngStream& rng);

// E = C^p + C^q, theta = diag(1, -1), E+ = graph of C, all conjugated by a
// random ambient unitary. scramble_basis also mixes the E+ basis.
struct GraphInstance {
  RPSpace space;
  MatC c;          // q x p in the unconjugated frame
  MatC e0_basis;   // ambient basis of E+ ∩ Fix(theta) = graph over ker C
};
GraphInstance graph_instance(Index p, Index q, const std::vector<double>& sv, RngStream& rng,
                             bool scramble_basis = true);

// theta-symmetric operator on E+ coordinates that preserves the null space.
MatC random_theta_symmetric(const RPSpace& space, RngStream& rng);

// Unitary U with theta U theta = U^{-1} and U E+ = E+, returned as its
// action on E+ coordinates.
struct TwistedUnitary {
  RPSpace space;
  MatC ambient;
  MatC coords;
};
TwistedUnitary twisted_unitary_instance(RngStream& rng);

// Graph instance whose E0 = ker C; Markov exactly when C is a partial isometry.
struct MarkovInstance {
  GraphInstance graph;
  bool expected_markov;
};
MarkovInstance markov_instance(RngStream& rng);

}  // namespace oskit::instances
