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

#include "oskit/linalg.hpp"

namespace oskit {

std::string_view verdict_name(Verdict v) {
  return v == Verdict::Psd ? "PSD" : "NOT_PSD";
}

GramReport classify_spectrum(const Eigen::VectorXd& ascending_eigs, double tol) {
  GramReport r;
  r.size = ascending_eigs.size();
  r.tol = tol;
  if (r.size == 0) return r;
  r.min_eig = ascending_eigs(0);
  r.max_eig = ascending_eigs(r.size - 1);
  r.verdict = r.min_eig >= -tol * std::max(1.0, r.max_eig) ? Verdict::Psd : Verdict::NotPsd;
  return r;
}

}  // namespace oskit
