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

// Command-line front end for the hullvol library.
//
//   hullvol coverage --body simplex --d 8 --n 1000 --tests 100000 --seed 7
//   hullvol scan --d 8 --grid 100,1000,10000 --tests 10000
//   hullvol bounds --euler
//   hullvol verify
//
// Values come from defaults, then --config, then flags. The seed falls back
// to HULLVOL_SEED when neither the flags nor the config set it.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hullvol/cli.hpp"
#include "hullvol/errors.hpp"
#include "json.hpp"

namespace {

struct Flags {
  std::string body;
  std::string polytope;
  std::size_t d = 0;
  std::uint64_t n = 0;
  std::uint64_t tests = 0;
  std::uint64_t hulls = 0;
  double alpha = 0.0;
  double gamma = 0.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  std::string out;
  std::string format;
  std::string config;
  std::vector<std::uint64_t> grid;
  double margin = 0.0;
  std::size_t cap = 0;
  std::uint64_t budget = 0;
  std::uint64_t runs = 0;
  double delta = 0.0;
};

void print_error(const std::string& kind, const std::string& message,
                 int status) {
  nlohmann::json rec;
  rec["error"] = kind;
  rec["message"] = message;
  rec["exit_status"] = status;
  std::cerr << rec.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using hullvol::cli::RunConfig;
  CLI::App app{"Random convex hull coverage experiments"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Flags f;
  bool euler = false;
  auto* o_body = app.add_option("--body", f.body,
                                "simplex, orthogonal_simplex, hypercube, "
                                "ball or polytope");
  auto* o_poly = app.add_option("--polytope", f.polytope,
                                "Polytope JSON file for --body polytope");
  auto* o_d = app.add_option("--d", f.d, "Dimension");
  auto* o_n = app.add_option("--n", f.n, "Hull points (sample count)");
  auto* o_tests = app.add_option("--tests", f.tests, "Test points or trials");
  auto* o_hulls = app.add_option("--hulls", f.hulls, "Independent hulls");
  auto* o_alpha = app.add_option("--alpha", f.alpha, "Cap width");
  auto* o_gamma = app.add_option("--gamma", f.gamma, "Typical-set gamma");
  auto* o_eps = app.add_option("--epsilon", f.epsilon, "Typical-set epsilon");
  auto* o_seed = app.add_option("--seed", f.seed, "Root seed");
  auto* o_workers = app.add_option("--workers", f.workers, "Worker threads");
  auto* o_out = app.add_option("--out", f.out, "Output path (stdout if unset)");
  auto* o_format = app.add_option("--format", f.format, "csv or json");
  auto* o_config = app.add_option("--config", f.config,
                                  "JSON config, or an earlier output file");
  auto* o_grid = app.add_option("--grid", f.grid, "Scan grid of N values")
                     ->delimiter(',');
  auto* o_margin = app.add_option("--margin", f.margin,
                                  "Slack on the lower reference threshold");
  auto* o_cap = app.add_option("--cap", f.cap, "Sample from this cap");
  auto* o_budget = app.add_option("--budget", f.budget, "Draws per caps run");
  auto* o_runs = app.add_option("--runs", f.runs, "Independent caps runs");
  auto* o_delta = app.add_option("--delta", f.delta,
                                 "Split width around t = 1 in the integrals");

  std::vector<CLI::App*> subs;
  for (const char* name : {"sample", "coverage", "scan", "typical", "caps",
                           "contain", "bounds", "verify"}) {
    subs.push_back(app.add_subcommand(name));
  }
  subs[6]->add_flag("--euler", euler, "Print only the Euler integral");
  subs[0]->description("Draw points from a body or a cap");
  subs[1]->description("Estimate the coverage fraction of a random hull");
  subs[2]->description("Coverage along a grid of N with nested hulls");
  subs[3]->description("Estimate the volume share of the typical set");
  subs[4]->description("Cap collection waiting times");
  subs[5]->description("Containment of a typical point in a cap hull");
  subs[6]->description("Evaluate bounds, thresholds and integrals");
  subs[7]->description("Run the property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("invalid_config", e.what(), hullvol::cli::kExitInvalidConfig);
    return hullvol::cli::kExitInvalidConfig;
  }

  RunConfig config;
  bool command_set = false;
  bool seed_set = false;
  try {
    if (*o_config) {
      const auto j = hullvol::cli::load_config_file(f.config);
      config = hullvol::cli::from_json(j, config);
      command_set = j.contains("command");
      seed_set = j.contains("seed");
    }
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (subs[k]->parsed()) {
        config.command = hullvol::cli::parse_command(subs[k]->get_name());
        command_set = true;
      }
    }
    if (!command_set) {
      throw hullvol::InvalidArgument("no command given");
    }
    if (*o_body) config.body = f.body;
    if (*o_poly) config.polytope = f.polytope;
    if (*o_d) config.d = f.d;
    if (*o_n) config.n = f.n;
    if (*o_tests) config.tests = f.tests;
    if (*o_hulls) config.hulls = f.hulls;
    if (*o_alpha) config.alpha = f.alpha;
    if (*o_gamma) config.gamma = f.gamma;
    if (*o_eps) config.epsilon = f.epsilon;
    if (*o_workers) config.workers = f.workers;
    if (*o_out) config.out = f.out;
    if (*o_format) config.format = hullvol::report::parse_format(f.format);
    if (*o_grid) config.grid = f.grid;
    if (*o_margin) config.margin = f.margin;
    if (*o_cap) config.cap = f.cap;
    if (*o_budget) config.budget = f.budget;
    if (*o_runs) config.runs = f.runs;
    if (*o_delta) config.delta = f.delta;
    if (euler) config.euler = true;
    if (*o_seed) {
      config.seed = f.seed;
    } else if (!seed_set) {
      if (const char* env = std::getenv("HULLVOL_SEED")) {
        try {
          std::size_t used = 0;
          config.seed = std::stoull(env, &used);
          if (env[used] != '\0') throw std::invalid_argument(env);
        } catch (const std::exception&) {
          throw hullvol::InvalidArgument("HULLVOL_SEED is not an integer");
        }
      }
    }
    if (config.out && *o_config) {
      std::error_code ec;
      if (std::filesystem::equivalent(*config.out, f.config, ec)) {
        throw hullvol::InvalidArgument(
            "output path would overwrite the config input");
      }
    }
  } catch (const std::exception& e) {
    print_error("invalid_config", e.what(), hullvol::cli::kExitInvalidConfig);
    return hullvol::cli::kExitInvalidConfig;
  }
  return hullvol::cli::run(config, std::cout, std::cerr);
}
