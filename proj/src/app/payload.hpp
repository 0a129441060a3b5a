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

#include <cstdint>
#include <string>
#include <vector>

#include "app/report.hpp"
#include "oskit/freefield.hpp"
#include "oskit/kernels.hpp"

// Typed access to scenario payloads. Every accessor throws SchemaError on a
// missing key or a value of the wrong type.
namespace oskit::app {

[[noreturn]] void schema_error(const std::string& what);

const json& field(const json& obj, const std::string& key);
bool has(const json& obj, const std::string& key);

double num(const json& obj, const std::string& key);
double num(const json& obj, const std::string& key, double fallback);
int integer(const json& obj, const std::string& key);
int integer(const json& obj, const std::string& key, int fallback);
std::uint64_t seed(const json& obj, const std::string& key, std::uint64_t fallback);
bool flag(const json& obj, const std::string& key, bool fallback);
std::string str(const json& obj, const std::string& key);
std::string str(const json& obj, const std::string& key, const std::string& fallback);
std::vector<double> num_list(const json& obj, const std::string& key);
std::vector<int> int_list(const json& obj, const std::string& key);

// A number or an [re, im] pair.
cplx complex_value(const json& v);
// Row-major array of rows; entries are numbers or [re, im] pairs.
MatC complex_matrix(const json& v);
VecC complex_vector(const json& v);
Eigen::MatrixXd real_matrix(const json& v);

// {"atoms": [{"loc": l, "weight": w or matrix}], "support": "nonneg" | "real"}
SpectralMeasure spectral_measure(const json& v);
// {"family": "EXP_LINE", "params": {...}}
KernelSpec kernel_spec(const json& v);
// "LINE" or {"tag": "INTERVAL", "a": 1}
ReflectionGeometry geometry(const json& v);
// {"kind": "atomic", "atoms": [{"m": 1, "w": 1}]} or {"kind": "power", "s": 1}
freefield::MassMeasure mass_measure(const json& v);

// Points as columns from "points" (numbers for 1-d, arrays otherwise),
// "uniform": {lo, hi, count} (1-d, ends included) or
// "random": {lo, hi, count, seed} (per coordinate; x0 range via lo0/hi0).
Eigen::MatrixXd points(const json& payload, int dim);

}  // namespace oskit::app
