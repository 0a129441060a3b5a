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

#include "app/payload.hpp"

#include "oskit/rng.hpp"

namespace oskit::app {

void schema_error(const std::string& what) { fail(Errc::SchemaError, what); }

bool has(const json& obj, const std::string& key) { return obj.is_object() && obj.contains(key); }

const json& field(const json& obj, const std::string& key) {
  if (!obj.is_object()) schema_error("expected an object around '" + key + "'");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error("missing key '" + key + "'");
  return *it;
}

double num(const json& obj, const std::string& key) {
  const json& v = field(obj, key);
  if (!v.is_number()) schema_error("'" + key + "' must be a number");
  return v.get<double>();
}

double num(const json& obj, const std::string& key, double fallback) {
  return has(obj, key) ? num(obj, key) : fallback;
}

int integer(const json& obj, const std::string& key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) schema_error("'" + key + "' must be an integer");
  return v.get<int>();
}

int integer(const json& obj, const std::string& key, int fallback) {
  return has(obj, key) ? integer(obj, key) : fallback;
}

std::uint64_t seed(const json& obj, const std::string& key, std::uint64_t fallback) {
  if (!has(obj, key)) return fallback;
  const json& v = field(obj, key);
  if (!v.is_number_integer()) schema_error("'" + key + "' must be an integer");
  return v.is_number_unsigned() ? v.get<std::uint64_t>() : static_cast<std::uint64_t>(v.get<std::int64_t>());
}

bool flag(const json& obj, const std::string& key, bool fallback) {
  if (!has(obj, key)) return fallback;
  const json& v = field(obj, key);
  if (!v.is_boolean()) schema_error("'" + key + "' must be a boolean");
  return v.get<bool>();
}

std::string str(const json& obj, const std::string& key) {
  const json& v = field(obj, key);
  if (!v.is_string()) schema_error("'" + key + "' must be a string");
  return v.get<std::string>();
}

std::string str(const json& obj, const std::string& key, const std::string& fallback) {
  return has(obj, key) ? str(obj, key) : fallback;
}

std::vector<double> num_list(const json& obj, const std::string& key) {
  const json& v = field(obj, key);
  if (!v.is_array()) schema_error("'" + key + "' must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) schema_error("'" + key + "' must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<int> int_list(const json& obj, const std::string& key) {
  const json& v = field(obj, key);
  if (!v.is_array()) schema_error("'" + key + "' must be an array");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) schema_error("'" + key + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

cplx complex_value(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  schema_error("expected a number or an [re, im] pair");
}

MatC complex_matrix(const json& v) {
  if (!v.is_array() || v.empty() || !v[0].is_array()) schema_error("matrix must be an array of rows");
  const auto rows = static_cast<Index>(v.size());
  const auto cols = static_cast<Index>(v[0].size());
  MatC m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!v[i].is_array() || static_cast<Index>(v[i].size()) != cols) schema_error("ragged matrix rows");
    for (Index j = 0; j < cols; ++j) m(i, j) = complex_value(v[i][j]);
  }
  return m;
}

VecC complex_vector(const json& v) {
  if (!v.is_array()) schema_error("vector must be an array");
  VecC out(static_cast<Index>(v.size()));
  for (Index i = 0; i < out.size(); ++i) out(i) = complex_value(v[i]);
  return out;
}

Eigen::MatrixXd real_matrix(const json& v) {
  const MatC m = complex_matrix(v);
  if (m.imag().cwiseAbs().maxCoeff() > 0.0) schema_error("matrix must be real");
  return m.real();
}

SpectralMeasure spectral_measure(const json& v) {
  SpectralMeasure m;
  const std::string support = str(v, "support", "nonneg");
  if (support == "nonneg") m.support = Support::NonNeg;
  else if (support == "real") m.support = Support::Real;
  else schema_error("support must be 'nonneg' or 'real'");
  const json& atoms = field(v, "atoms");
  if (!atoms.is_array()) schema_error("'atoms' must be an array");
  for (const auto& a : atoms) {
    const json& w = field(a, "weight");
    MatC weight = w.is_array() && !w.empty() && w[0].is_array() ? complex_matrix(w)
                                                                 : MatC::Constant(1, 1, complex_value(w));
    m.atoms.push_back({num(a, "loc"), std::move(weight)});
  }
  return m;
}

KernelSpec kernel_spec(const json& v) {
  const std::string family = str(v, "family");
  const json empty = json::object();
  const json& p = has(v, "params") ? field(v, "params") : empty;
  KernelSpec k;
  if (family == "EXP_LINE") {
    k = KernelSpec::exp_line(num(p, "lambda"));
  } else if (family == "PERIODIC_GREEN") {
    k = KernelSpec::periodic_green(num(p, "lambda"), num(p, "beta"));
  } else if (family == "POWER_LAW") {
    k = KernelSpec::power_law(num(p, "a"), integer(p, "d"));
  } else if (family == "SPHERE_Q") {
    k = KernelSpec::sphere_q(num(p, "lambda"), integer(p, "n"));
  } else if (family == "SPHERE_R") {
    const std::string variant = str(p, "variant", "factor2");
    if (variant != "factor2" && variant != "paper-def") schema_error("variant must be factor2 or paper-def");
    k = KernelSpec::sphere_r(num(p, "lambda"), integer(p, "n"),
                             variant == "factor2" ? sphere::RVariant::Factor2 : sphere::RVariant::NoFactor2);
  } else if (family == "HYP_PSI") {
    k = KernelSpec::hyp_psi(num(p, "m"), integer(p, "n"));
  } else if (family == "CUSTOM") {
    k = KernelSpec::custom(complex_matrix(field(p, "samples")));
  } else {
    schema_error("unknown kernel family '" + family + "'");
  }
  return k;
}

ReflectionGeometry geometry(const json& v) {
  const std::string tag = v.is_string() ? v.get<std::string>() : str(v, "tag");
  if (tag == "LINE") return ReflectionGeometry::line();
  if (tag == "INTERVAL") return ReflectionGeometry::interval(num(v, "a"));
  if (tag == "CIRCLE") return ReflectionGeometry::circle(num(v, "beta"));
  if (tag == "HALFSPACE") return ReflectionGeometry::halfspace(integer(v, "d"));
  if (tag == "HALFBALL") return ReflectionGeometry::halfball(integer(v, "n"));
  schema_error("unknown geometry '" + tag + "'");
}

freefield::MassMeasure mass_measure(const json& v) {
  const std::string kind = str(v, "kind");
  if (kind == "power") return freefield::MassMeasure::power_law(num(v, "s"));
  if (kind != "atomic") schema_error("mass measure kind must be 'atomic' or 'power'");
  std::vector<freefield::MassAtom> atoms;
  const json& list = field(v, "atoms");
  if (!list.is_array()) schema_error("'atoms' must be an array");
  for (const auto& a : list) atoms.push_back({num(a, "m"), num(a, "w", 1.0)});
  return freefield::MassMeasure::atomic(std::move(atoms));
}

Eigen::MatrixXd points(const json& payload, int dim) {
  if (has(payload, "points")) {
    const json& list = field(payload, "points");
    if (!list.is_array() || list.empty()) schema_error("'points' must be a nonempty array");
    Eigen::MatrixXd pts(dim, static_cast<Index>(list.size()));
    for (Index j = 0; j < pts.cols(); ++j) {
      const json& p = list[j];
      if (p.is_number() && dim == 1) {
        pts(0, j) = p.get<double>();
      } else if (p.is_array() && static_cast<int>(p.size()) == dim) {
        for (int i = 0; i < dim; ++i) {
          if (!p[i].is_number()) schema_error("point coordinates must be numbers");
          pts(i, j) = p[i].get<double>();
        }
      } else {
        schema_error("point " + std::to_string(j) + " has the wrong dimension");
      }
    }
    return pts;
  }
  if (has(payload, "uniform")) {
    const json& u = field(payload, "uniform");
    if (dim != 1) schema_error("'uniform' points are one-dimensional");
    const int count = integer(u, "count");
    if (count < 1) schema_error("count must be positive");
    const double lo = num(u, "lo"), hi = num(u, "hi");
    Eigen::MatrixXd pts(1, count);
    for (int j = 0; j < count; ++j) pts(0, j) = count == 1 ? lo : lo + (hi - lo) * j / (count - 1);
    return pts;
  }
  if (has(payload, "random")) {
    const json& r = field(payload, "random");
    const int count = integer(r, "count");
    if (count < 1) schema_error("count must be positive");
    const double lo = num(r, "lo"), hi = num(r, "hi");
    const double lo0 = num(r, "lo0", lo), hi0 = num(r, "hi0", hi);
    RngStream rng(seed(r, "seed", 0), 0x707473);
    Eigen::MatrixXd pts(dim, count);
    for (int j = 0; j < count; ++j)
      for (int i = 0; i < dim; ++i) pts(i, j) = i == 0 ? rng.uniform(lo0, hi0) : rng.uniform(lo, hi);
    return pts;
  }
  schema_error("payload needs 'points', 'uniform' or 'random'");
}

}  // namespace oskit::app
