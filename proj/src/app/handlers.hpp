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

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "app/payload.hpp"
#include "app/report.hpp"
#include "oskit/linalg.hpp"

namespace oskit::app {

class Context {
 public:
  Context(const json& payload, const json& tolerances, ScenarioReport& report)
      : payload_(payload), tolerances_(tolerances), report_(report) {}

  const json& payload() const { return payload_; }
  ScenarioReport& report() { return report_; }

  // Scenario override if present, else the module default; echoed in the report.
  double tol(const std::string& name, double fallback);

  void check(const std::string& name, double value, Cmp cmp, double bound);
  void check_true(const std::string& name, bool ok);
  // min_eig / max(1, max_eig) against -tol, in the direction expected.
  void verdict(const std::string& prefix, const GramReport& g, bool expect_psd, double tol);
  void cite(std::string what) { report_.provenance.push_back(std::move(what)); }
  void note(const std::string& key, std::string value) { report_.notes[key] = std::move(value); }
  void dump(std::vector<double> series);
  void dump_spectrum(const MatC& m);

 private:
  const json& payload_;
  const json& tolerances_;
  ScenarioReport& report_;
};

inline bool expect_psd(const json& p) { return !flag(p, "expect_not_psd", false); }

using Handler = std::function<void(Context&)>;
using HandlerTable = std::map<std::pair<std::string, std::string>, Handler>;

void register_core(HandlerTable& table);
void register_analytic(HandlerTable& table);
void register_paths(HandlerTable& table);

const HandlerTable& handlers();

}  // namespace oskit::app
