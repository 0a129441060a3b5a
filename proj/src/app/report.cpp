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

#include "app/report.hpp"

#include <cmath>

namespace oskit::app {

bool Check::pass() const {
  if (std::isnan(value)) return false;
  switch (cmp) {
    case Cmp::Le: return value <= bound;
    case Cmp::Lt: return value < bound;
    case Cmp::Ge: return value >= bound;
    case Cmp::Gt: return value > bound;
  }
  return false;
}

void ScenarioReport::finalize() {
  if (verdict == Verdict::Error) return;
  verdict = Verdict::Pass;
  for (const auto& c : checks)
    if (!c.pass()) verdict = Verdict::Fail;
  if (checks.empty()) verdict = Verdict::Fail;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Error: return "ERROR";
  }
  return "?";
}

std::string cmp_name(Cmp c) {
  switch (c) {
    case Cmp::Le: return "<=";
    case Cmp::Lt: return "<";
    case Cmp::Ge: return ">=";
    case Cmp::Gt: return ">";
  }
  return "?";
}

namespace {

// JSON has no inf/nan; keep them visible as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

json to_json(const ScenarioReport& r, bool timestamps) {
  json j;
  j["schema"] = kSchema;
  j["name"] = r.name;
  j["module"] = r.module;
  j["check"] = r.check;
  j["verdict"] = verdict_name(r.verdict);
  json checks = json::array();
  json residuals = json::object();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"value", number(c.value)},
                      {"bound", number(c.bound)},
                      {"cmp", cmp_name(c.cmp)},
                      {"pass", c.pass()}});
    residuals[c.name] = number(c.value);
  }
  j["checks"] = checks;
  j["residuals"] = residuals;
  json tol = json::object();
  for (const auto& [k, v] : r.tolerances) tol[k] = number(v);
  j["tolerances"] = tol;
  j["provenance"] = r.provenance;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.verdict == Verdict::Error) j["error"] = {{"code", r.error_code}, {"message", r.error_message}};
  if (timestamps) j["wall_time"] = r.wall_time;
  return j;
}

bool SuiteReport::all_pass() const {
  for (const auto& s : scenarios)
    if (s.verdict != Verdict::Pass) return false;
  return true;
}

json to_json(const SuiteReport& s, bool timestamps) {
  json j;
  j["schema"] = kSchema;
  json list = json::array();
  int pass = 0, fail = 0, error = 0;
  for (const auto& r : s.scenarios) {
    list.push_back(to_json(r, timestamps));
    if (r.verdict == Verdict::Pass) ++pass;
    else if (r.verdict == Verdict::Fail) ++fail;
    else ++error;
  }
  j["scenarios"] = list;
  j["summary"] = {{"total", s.scenarios.size()}, {"pass", pass}, {"fail", fail}, {"error", error},
                  {"verdict", s.all_pass() ? "PASS" : "FAIL"}};
  if (timestamps) j["wall_time"] = s.wall_time;
  return j;
}

}  // namespace oskit::app
