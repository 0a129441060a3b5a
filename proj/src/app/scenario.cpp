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

#include "app/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "app/handlers.hpp"
#include "oskit/error.hpp"

namespace oskit::app {

double Context::tol(const std::string& name, double fallback) {
  double v = fallback;
  if (tolerances_.is_object() && tolerances_.contains(name)) {
    const json& t = tolerances_.at(name);
    if (!t.is_number()) schema_error("tolerance '" + name + "' must be a number");
    v = t.get<double>();
  }
  report_.tolerances[name] = v;
  return v;
}

void Context::check(const std::string& name, double value, Cmp cmp, double bound) {
  report_.checks.push_back({name, value, bound, cmp});
}

void Context::check_true(const std::string& name, bool ok) { check(name, ok ? 1.0 : 0.0, Cmp::Ge, 1.0); }

void Context::verdict(const std::string& prefix, const GramReport& g, bool expect_psd, double tol) {
  if (expect_psd)
    check(prefix + "_min_eig_rel", g.relative_min(), Cmp::Ge, -tol);
  else
    check(prefix + "_min_eig_rel", g.relative_min(), Cmp::Lt, -tol);
}

void Context::dump(std::vector<double> series) {
  std::sort(series.begin(), series.end());
  report_.dump = std::move(series);
}

void Context::dump_spectrum(const MatC& m) {
  const Eigen::VectorXd e = hermitian_spectrum(m);
  dump(std::vector<double>(e.data(), e.data() + e.size()));
}

const HandlerTable& handlers() {
  static const HandlerTable table = [] {
    HandlerTable t;
    register_core(t);
    register_analytic(t);
    register_paths(t);
    return t;
  }();
  return table;
}

json load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  json j = json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "malformed JSON in " + path.string());
  return j;
}

namespace {

const std::set<std::string>& module_tags() {
  static const std::set<std::string> tags{"rphs-core", "kernel-lab", "dilation", "kms",
                                          "sphere",    "freefield",  "ospaths"};
  return tags;
}

}  // namespace

ScenarioReport run_scenario(const json& scenario, std::optional<std::uint64_t> seed) {
  if (!scenario.is_object()) schema_error("scenario must be a JSON object");
  ScenarioReport report;
  report.name = str(scenario, "name");
  report.module = str(scenario, "module");
  report.check = str(scenario, "check");
  if (!module_tags().contains(report.module)) schema_error("unknown module '" + report.module + "'");
  const auto it = handlers().find({report.module, report.check});
  if (it == handlers().end())
    schema_error("module '" + report.module + "' has no check '" + report.check + "'");

  json payload = scenario.contains("payload") ? scenario.at("payload") : json::object();
  if (!payload.is_object()) schema_error("payload must be an object");
  for (const auto& [key, value] : scenario.items())
    if (key.starts_with("expect")) payload[key] = value;
  if (seed && flag(scenario, "stochastic", false)) payload["seed"] = *seed;
  const json tolerances = scenario.contains("tolerances") ? scenario.at("tolerances") : json::object();

  const auto start = std::chrono::steady_clock::now();
  Context ctx(payload, tolerances, report);
  try {
    it->second(ctx);
  } catch (const Error& e) {
    if (e.code() == Errc::SchemaError) throw;
    report.verdict = Verdict::Error;
    report.error_code = std::string(errc_name(e.code()));
    report.error_message = e.what();
  }
  report.finalize();
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport suite;
  const auto start = std::chrono::steady_clock::now();
  for (const json& s : battery()) {
    if (!options.filter.empty() && s.at("module") != options.filter) continue;
    suite.scenarios.push_back(run_scenario(s, options.seed));
  }
  suite.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return suite;
}

void write_dumps(const SuiteReport& suite, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& r : suite.scenarios) {
    if (r.dump.empty()) continue;
    std::ofstream out(dir / (r.name + ".csv"));
    out.precision(17);
    out << "index,value\n";
    for (std::size_t i = 0; i < r.dump.size(); ++i) out << i << ',' << r.dump[i] << '\n';
  }
}

}  // namespace oskit::app
