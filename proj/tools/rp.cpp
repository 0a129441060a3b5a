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

// rp: run reflection-positivity scenarios and the acceptance battery.
//
// Exit codes: 0 all PASS, 1 any FAIL or ERROR, 2 input error.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "app/scenario.hpp"
#include "oskit/error.hpp"

namespace {

int input_error(const oskit::Error& e) {
  std::cerr << "rp: " << oskit::errc_name(e.code()) << ": " << e.what() << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace oskit::app;
  CLI::App app{"Reflection positivity workbench"};
  app.require_subcommand(1);

  std::string file;
  bool no_timestamps = false;
  auto* run = app.add_subcommand("run", "Run one scenario file and print its JSON report");
  run->add_option("file", file, "scenario JSON")->required();
  run->add_flag("--no-timestamps", no_timestamps, "omit wall times");

  std::string filter, dump_dir;
  std::optional<std::uint64_t> seed;
  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  suite->add_option("--filter", filter, "module tag");
  suite->add_option("--seed", seed, "seed for stochastic scenarios");
  suite->add_option("--dump-dir", dump_dir, "directory for CSV dumps");
  suite->add_flag("--no-timestamps", no_timestamps, "omit wall times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      const ScenarioReport r = run_scenario(load_scenario(file));
      std::cout << to_json(r, !no_timestamps).dump(2) << '\n';
      return r.verdict == Verdict::Pass ? 0 : 1;
    }
    static const char* const tags[] = {"rphs-core", "kernel-lab", "dilation", "kms", "sphere", "freefield", "ospaths"};
    if (!filter.empty() && std::find(std::begin(tags), std::end(tags), filter) == std::end(tags)) {
      std::cerr << "rp: unknown module tag '" << filter << "'\n";
      return 2;
    }
    const SuiteReport s = run_suite({filter, seed});
    if (!dump_dir.empty()) write_dumps(s, dump_dir);
    std::cout << to_json(s, !no_timestamps).dump(2) << '\n';
    return s.all_pass() ? 0 : 1;
  } catch (const oskit::Error& e) {
    return input_error(e);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "rp: SCHEMA_ERROR: " << e.what() << '\n';
    return 2;
  }
}
