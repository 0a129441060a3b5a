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

#include <stdexcept>
#include <string>
#include <string_view>

namespace oskit {

enum class Errc {
  NonInvolutiveTheta,
  RankDeficientBasis,
  EigenspaceMismatch,
  NotRp,
  NullspaceNotPreserved,
  E0NotFixed,
  NotHermitian,
  DomainViolation,
  CoincidentPoints,
  MeasureNotPositive,
  NegativeLocation,
  ZeroEigenvalueQuadrature,
  NonpositiveRealPart,
  OutsideStrip,
  NotStrictContraction,
  ModularRelationViolated,
  Nonconvergent,
  BadC,
  SingularPoint,
  Antipode,
  OutOfBall,
  ArgumentOnCut,
  Nonintegrable,
  NotTame,
  OriginSingularity,
  SingularPresent,
  NotPsd,
  GridTooCoarse,
  NotReversible,
  ParseError,
  SchemaError,
};

// Upper-case wire name, e.g. "NON_INVOLUTIVE_THETA".
std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

inline void require(bool ok, Errc code, const std::string& detail) {
  if (!ok) fail(code, detail);
}

}  // namespace oskit
