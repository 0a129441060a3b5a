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

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace oskit::app {

using json = nlohmann::json;

enum class Cmp { Le, Lt, Ge, Gt };

struct Check {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  Cmp cmp = Cmp::Le;

  bool pass() const;
};

enum class Verdict { Pass, Fail, Error };

struct ScenarioReport {
  std::string name;
  std::string module;
  std::string check;
  Verdict verdict = Verdict::Pass;
  std::vector<Check> checks;
  std::map<std::string, double> tolerances;
  std::vector<std::string> provenance;
  std::map<std::string, std::string> notes;
  std::string error_code;
  std::string error_message;
  std::vector<double> dump;  // ascending series for --dump-dir
  double wall_time = 0.0;

  void finalize();  // verdict from checks unless already Error
};

std::string verdict_name(Verdict v);
std::string cmp_name(Cmp c);

json to_json(const ScenarioReport& r, bool timestamps);

struct SuiteReport {
  std::vector<ScenarioReport> scenarios;
  double wall_time = 0.0;

  bool all_pass() const;
};

json to_json(const SuiteReport& s, bool timestamps);

inline constexpr const char* kSchema = "oskit-report/1";

}  // namespace oskit::app
