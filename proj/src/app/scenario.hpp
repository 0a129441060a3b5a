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

// Scenario ingestion and the built-in battery.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "app/report.hpp"

namespace oskit::app {

// Throws Errc::ParseError for unreadable or malformed files.
json load_scenario(const std::filesystem::path& path);

// Runs one scenario. Structural problems (unknown module or check, bad
// payload fields) throw Errc::SchemaError; module errors become an ERROR
// verdict carrying the error code. A seed override applies only to
// scenarios marked "stochastic".
ScenarioReport run_scenario(const json& scenario, std::optional<std::uint64_t> seed = {});

// Scenario definitions for the acceptance battery, in run order.
const std::vector<json>& battery();

struct SuiteOptions {
  std::string filter;  // module tag; empty runs everything
  std::optional<std::uint64_t> seed;
};

SuiteReport run_suite(const SuiteOptions& options);

// One CSV per scenario that produced a series: index,value.
void write_dumps(const SuiteReport& suite, const std::filesystem::path& dir);

}  // namespace oskit::app
