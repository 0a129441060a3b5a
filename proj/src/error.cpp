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

#include "oskit/error.hpp"

namespace oskit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonInvolutiveTheta: return "NON_INVOLUTIVE_THETA";
    case Errc::RankDeficientBasis: return "RANK_DEFICIENT_BASIS";
    case Errc::EigenspaceMismatch: return "EIGENSPACE_MISMATCH";
    case Errc::NotRp: return "NOT_RP";
    case Errc::NullspaceNotPreserved: return "NULLSPACE_NOT_PRESERVED";
    case Errc::E0NotFixed: return "E0_NOT_FIXED";
    case Errc::NotHermitian: return "NOT_HERMITIAN";
    case Errc::DomainViolation: return "DOMAIN_VIOLATION";
    case Errc::CoincidentPoints: return "COINCIDENT_POINTS";
    case Errc::MeasureNotPositive: return "MEASURE_NOT_POSITIVE";
    case Errc::NegativeLocation: return "NEGATIVE_LOCATION";
    case Errc::ZeroEigenvalueQuadrature: return "ZERO_EIGENVALUE_QUADRATURE";
    case Errc::NonpositiveRealPart: return "NONPOSITIVE_REAL_PART";
    case Errc::OutsideStrip: return "OUTSIDE_STRIP";
    case Errc::NotStrictContraction: return "NOT_STRICT_CONTRACTION";
    case Errc::ModularRelationViolated: return "MODULAR_RELATION_VIOLATED";
    case Errc::Nonconvergent: return "NONCONVERGENT";
    case Errc::BadC: return "BAD_C";
    case Errc::SingularPoint: return "SINGULAR_POINT";
    case Errc::Antipode: return "ANTIPODE";
    case Errc::OutOfBall: return "OUT_OF_BALL";
    case Errc::ArgumentOnCut: return "ARGUMENT_ON_CUT";
    case Errc::Nonintegrable: return "NONINTEGRABLE";
    case Errc::NotTame: return "NOT_TAME";
    case Errc::OriginSingularity: return "ORIGIN_SINGULARITY";
    case Errc::SingularPresent: return "SINGULAR_PRESENT";
    case Errc::NotPsd: return "NOT_PSD";
    case Errc::GridTooCoarse: return "GRID_TOO_COARSE";
    case Errc::NotReversible: return "NOT_REVERSIBLE";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::SchemaError: return "SCHEMA_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace oskit
