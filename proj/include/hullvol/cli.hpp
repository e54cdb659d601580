// Copyright 2026 The hullvol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HULLVOL_CLI_HPP_
#define HULLVOL_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hullvol/report.hpp"
#include "json.hpp"

namespace hullvol::cli {

enum class Command { kSample, kCoverage, kScan, kTypical, kCaps, kContain, kBounds, kVerify };

std::string_view command_name(Command command);
Command parse_command(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitInvalidConfig = 2;

// Everything a run depends on. Defaults follow the cap and typical-set
// constants alpha = 3/100, gamma = 1/6, eps = 1/8.
struct RunConfig {
  Command command = Command::kCoverage;
  std::string body = "simplex";
  std::optional<std::string> polytope;  // JSON file, for body "polytope"
  std::size_t d = 8;
  std::uint64_t n = 1000;       // hull points; sample count for `sample`
  std::uint64_t tests = 10000;  // test points; trials for typical/contain
  std::uint64_t hulls = 1;
  double alpha = 3.0 / 100.0;
  double gamma = 1.0 / 6.0;
  double epsilon = 1.0 / 8.0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::optional<std::string> out;
  report::Format format = report::Format::kCsv;
  std::vector<std::uint64_t> grid;      // scan; empty picks a log grid
  double margin = 0.0;                  // scan reference slack
  std::optional<std::size_t> cap;       // sample from this cap instead
  std::uint64_t budget = 1'000'000;     // caps: draws per run
  std::uint64_t runs = 1;               // caps: independent runs
  bool euler = false;                   // bounds: only the Euler integral
  double delta = 0.05;                  // bounds: split width around t = 1
};

// Inverse pair; unknown keys in the input are rejected. `base` supplies the
// values for keys that are absent.
nlohmann::json to_json(const RunConfig& config);
RunConfig from_json(const nlohmann::json& j, RunConfig base = {});

// Reads a config file: either a JSON object, or an output file written by a
// previous run (CSV "# config: " line or JSON "config" member).
nlohmann::json load_config_file(const std::string& path);

// Throws InvalidArgument on any parameter outside the dispatched
// operation's preconditions.
void validate(const RunConfig& config);

// Validates, dispatches and writes the result to config.out (or `out` when
// unset). Errors go to `err` as one JSON line; the return value is the exit
// status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hullvol::cli

#endif  // HULLVOL_CLI_HPP_
