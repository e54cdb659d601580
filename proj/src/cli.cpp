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

#include "hullvol/cli.hpp"

#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include "hullvol/bounds.hpp"
#include "hullvol/errors.hpp"
#include "hullvol/experiments.hpp"
#include "hullvol/polytope_io.hpp"
#include "hullvol/sampling.hpp"
#include "hullvol/typical_set.hpp"
#include "hullvol/verify.hpp"

namespace hullvol::cli {
namespace {

using nlohmann::json;

constexpr std::pair<Command, std::string_view> kCommandNames[] = {
    {Command::kSample, "sample"},   {Command::kCoverage, "coverage"},
    {Command::kScan, "scan"},       {Command::kTypical, "typical"},
    {Command::kCaps, "caps"},       {Command::kContain, "contain"},
    {Command::kBounds, "bounds"},   {Command::kVerify, "verify"},
};

// Raised by a command after it has produced some rows; carries them so the
// caller can flush them with the partial marker.
struct PartialFailure : std::runtime_error {
  PartialFailure(const std::string& what, report::Table rows)
      : std::runtime_error(what), table(std::move(rows)) {}
  report::Table table;
};

template <class T>
void read_key(const json& j, const char* key, T& field) {
  if (!j.contains(key) || j.at(key).is_null()) return;
  try {
    field = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config key '") + key +
                          "' has the wrong type: " + e.what());
  }
}

template <class T>
void read_optional(const json& j, const char* key, std::optional<T>& field) {
  if (!j.contains(key)) return;
  if (j.at(key).is_null()) {
    field.reset();
    return;
  }
  T value{};
  read_key(j, key, value);
  field = value;
}

std::shared_ptr<const geometry::PolytopeBody> load_polytope_body(
    const RunConfig& c) {
  if (!c.polytope) {
    throw InvalidArgument("body 'polytope' needs --polytope <path>");
  }
  return geometry::make_polytope_body(geometry::load_polytope(*c.polytope));
}

BodySpec make_body(const RunConfig& c) {
  const BodyKind kind = parse_body_kind(c.body);
  if (kind == BodyKind::kSimplicialPolytope) {
    return BodySpec::polytope(load_polytope_body(c));
  }
  return BodySpec::of_kind(kind, c.d);
}

std::vector<std::uint64_t> scan_grid(const RunConfig& c) {
  if (!c.grid.empty()) return c.grid;
  std::vector<std::uint64_t> grid;
  for (std::uint64_t n = 10; n < c.n; n *= 10) grid.push_back(n);
  grid.push_back(c.n);
  return grid;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

experiments::CoverageConfig coverage_config(const RunConfig& c,
                                            std::uint64_t n) {
  experiments::CoverageConfig cc;
  cc.n = n;
  cc.test_points = c.tests;
  cc.hulls = c.hulls;
  cc.seed = c.seed;
  cc.workers = c.workers;
  cc.fail_on_indeterminate = false;
  return cc;
}

report::Table run_sample(const RunConfig& c, const BodySpec& body) {
  report::Table t;
  t.columns.push_back("index");
  for (std::size_t j = 0; j < body.dimension(); ++j) {
    t.columns.push_back("x" + std::to_string(j));
  }
  RandomStream stream = make_stream(c.seed, StreamDomain::kGeneral, 0);
  for (std::uint64_t k = 0; k < c.n; ++k) {
    const Point p =
        c.cap ? sampling::sample_cap(c.d, *c.cap, c.alpha, stream).coords
              : sampling::sample_body(body, stream);
    std::vector<json> row{k};
    row.insert(row.end(), p.begin(), p.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

report::Table run_typical(const RunConfig& c) {
  const typical::TypicalSetParams params(c.d, c.epsilon, c.gamma);
  RandomStream stream = make_stream(c.seed, StreamDomain::kGeneral, 0);
  const auto e = typical::estimate_typical_volume(params, c.tests, stream);
  report::Table t;
  t.columns = {"d",    "epsilon",  "gamma",  "trials", "hits",
               "fraction", "ci_low", "ci_high", "seed"};
  t.rows.push_back({c.d, c.epsilon, c.gamma, e.trials, e.hits, e.fraction,
                    e.ci.low, e.ci.high, c.seed});
  return t;
}

report::Table run_caps(const RunConfig& c) {
  report::Table t;
  t.columns = {"run",     "d",       "alpha",           "draws",
               "caps_hit", "all_collected_at", "mean_first_hit", "seed"};
  for (std::uint64_t r = 0; r < c.runs; ++r) {
    try {
      const auto rep = experiments::cap_collection(c.d, c.alpha, c.budget,
                                                   c.seed, r);
      std::uint64_t hit = 0;
      double sum = 0.0;
      for (const auto& w : rep.waiting_times) {
        if (!w) continue;
        ++hit;
        sum += static_cast<double>(*w);
      }
      const json all = rep.all_collected_at ? json(*rep.all_collected_at)
                                            : json(nullptr);
      const json mean = hit ? json(sum / static_cast<double>(hit))
                            : json(nullptr);
      t.rows.push_back({r, c.d, c.alpha, rep.draws, hit, all, mean, c.seed});
    } catch (const InvalidArgument&) {
      throw;
    } catch (const std::exception& e) {
      if (t.rows.empty()) throw;
      throw PartialFailure(e.what(), t);
    }
  }
  return t;
}

report::Table run_contain(const RunConfig& c) {
  experiments::ContainmentConfig cc;
  cc.d = c.d;
  cc.alpha = c.alpha;
  cc.gamma = c.gamma;
  cc.epsilon = c.epsilon;
  cc.trials = c.tests;
  cc.seed = c.seed;
  cc.workers = c.workers;
  const auto r = experiments::containment_experiment(cc);
  report::Table t;
  t.columns = {"d",
               "alpha",
               "gamma",
               "epsilon",
               "trials",
               "completed",
               "discarded",
               "inside_given_a",
               "p_given_a",
               "ci_low_given_a",
               "ci_high_given_a",
               "trials_with_b",
               "inside_given_ab",
               "p_given_ab",
               "inside_unconditioned",
               "p_unconditioned",
               "certified",
               "certified_but_outside",
               "lp_indeterminate",
               "abc_violations",
               "delta_d",
               "delta_d_vacuous",
               "mean_cap_attempts",
               "seed"};
  t.rows.push_back({c.d,
                    c.alpha,
                    c.gamma,
                    c.epsilon,
                    c.tests,
                    r.completed,
                    r.discarded,
                    r.inside_given_a,
                    r.p_given_a,
                    r.ci_given_a.low,
                    r.ci_given_a.high,
                    r.trials_with_b,
                    r.inside_given_ab,
                    r.p_given_ab,
                    r.inside_unconditioned,
                    r.p_unconditioned,
                    r.certified,
                    r.certified_but_outside,
                    r.lp_indeterminate,
                    r.events_abc_violations,
                    r.delta.value,
                    r.delta.vacuous,
                    r.mean_cap_attempts,
                    c.seed});
  return t;
}

report::Table run_bounds(const RunConfig& c) {
  report::Table t;
  t.columns = {"quantity", "value"};
  const auto integrals = bounds::verify_lower_bound_integrals(c.delta);
  t.rows.push_back({"euler_integral", integrals.euler_integral});
  if (c.euler) return t;
  t.rows.push_back({"euler_gamma", bounds::kEulerGamma});
  t.rows.push_back({"remainder_integral", integrals.remainder_integral});
  t.rows.push_back({"mean_f", integrals.mean_f});
  t.rows.push_back({"quadrature_error", integrals.error_estimate});
  const auto pred = bounds::threshold_predictions(c.d, c.margin);
  t.rows.push_back({"log_lower_threshold", pred.log_lower});
  t.rows.push_back({"log_upper_threshold", pred.log_upper});
  const auto dd = bounds::delta_d(c.alpha, c.gamma, c.d);
  t.rows.push_back({"delta_d", dd.value});
  t.rows.push_back({"delta_d_vacuous", dd.vacuous});
  const typical::TypicalSetParams params(c.d, c.epsilon, c.gamma);
  t.rows.push_back(
      {"event_a_lower_bound", typical::event_a_lower_bound(c.alpha, params)});
  return t;
}

report::Table run_verify(const RunConfig& c, bool& all_passed) {
  report::Table t;
  t.columns = {"check", "passed", "detail"};
  all_passed = true;
  for (const auto& r : verify::run_property_suite(c.seed, c.workers)) {
    all_passed = all_passed && r.passed;
    t.rows.push_back({r.name, r.passed, r.detail});
  }
  return t;
}

void emit_error(std::ostream& err, const char* kind, const std::string& msg,
                int status) {
  json rec;
  rec["error"] = kind;
  rec["message"] = msg;
  rec["exit_status"] = status;
  err << rec.dump() << '\n';
}

bool same_file(const std::string& a, const std::string& b) {
  std::error_code ec;
  if (std::filesystem::equivalent(a, b, ec)) return true;
  return std::filesystem::weakly_canonical(a, ec) ==
         std::filesystem::weakly_canonical(b, ec);
}

}  // namespace

std::string_view command_name(Command command) {
  for (const auto& [c, name] : kCommandNames) {
    if (c == command) return name;
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommandNames) {
    if (n == name) return c;
  }
  throw InvalidArgument("unknown command '" + std::string(name) + "'");
}

json to_json(const RunConfig& c) {
  json j;
  j["command"] = command_name(c.command);
  j["body"] = c.body;
  j["polytope"] = c.polytope ? json(*c.polytope) : json(nullptr);
  j["d"] = c.d;
  j["n"] = c.n;
  j["tests"] = c.tests;
  j["hulls"] = c.hulls;
  j["alpha"] = c.alpha;
  j["gamma"] = c.gamma;
  j["epsilon"] = c.epsilon;
  j["seed"] = c.seed;
  j["workers"] = c.workers;
  j["format"] = report::format_name(c.format);
  j["grid"] = c.grid;
  j["margin"] = c.margin;
  j["cap"] = c.cap ? json(*c.cap) : json(nullptr);
  j["budget"] = c.budget;
  j["runs"] = c.runs;
  j["euler"] = c.euler;
  j["delta"] = c.delta;
  return j;
}

RunConfig from_json(const json& j, RunConfig c) {
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  static const char* const kKeys[] = {
      "command", "body",   "polytope", "d",      "n",     "tests", "hulls",
      "alpha",   "gamma",  "epsilon",  "seed",   "workers", "out", "format",
      "grid",    "margin", "cap",      "budget", "runs",  "euler", "delta"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw InvalidArgument("unknown config key '" + key + "'");
  }
  if (j.contains("command")) {
    c.command = parse_command(j.at("command").get<std::string>());
  }
  read_key(j, "body", c.body);
  read_optional(j, "polytope", c.polytope);
  read_key(j, "d", c.d);
  read_key(j, "n", c.n);
  read_key(j, "tests", c.tests);
  read_key(j, "hulls", c.hulls);
  read_key(j, "alpha", c.alpha);
  read_key(j, "gamma", c.gamma);
  read_key(j, "epsilon", c.epsilon);
  read_key(j, "seed", c.seed);
  read_key(j, "workers", c.workers);
  read_optional(j, "out", c.out);
  if (j.contains("format")) {
    c.format = report::parse_format(j.at("format").get<std::string>());
  }
  read_key(j, "grid", c.grid);
  read_key(j, "margin", c.margin);
  read_optional(j, "cap", c.cap);
  read_key(j, "budget", c.budget);
  read_key(j, "runs", c.runs);
  read_key(j, "euler", c.euler);
  read_key(j, "delta", c.delta);
  return c;
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.rfind(report::kConfigPrefix, 0) == 0) {
    const auto end = text.find('\n');
    return json::parse(text.substr(report::kConfigPrefix.size(),
                                   end - report::kConfigPrefix.size()));
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("config file '" + path + "' is not JSON: " +
                          e.what());
  }
  if (j.is_object() && j.contains("schema_version") && j.contains("config")) {
    return j.at("config");
  }
  return j;
}

void validate(const RunConfig& c) {
  require(c.workers >= 1, "workers must be >= 1");
  if (c.command == Command::kVerify) return;
  require(c.d >= 1, "d must be >= 1");
  const BodyKind kind = parse_body_kind(c.body);
  const bool uses_body = c.command == Command::kSample ||
                         c.command == Command::kCoverage ||
                         c.command == Command::kScan;
  if (uses_body && kind == BodyKind::kSimplicialPolytope) {
    require(c.polytope.has_value(), "body 'polytope' needs --polytope <path>");
  }
  switch (c.command) {
    case Command::kSample:
      require(c.n >= 1, "n (sample count) must be >= 1");
      if (c.cap) {
        require(*c.cap < c.d, "cap index must be < d");
        require(c.alpha > 0.0 && c.alpha < 0.5, "alpha must lie in (0, 1/2)");
      }
      break;
    case Command::kCoverage:
    case Command::kScan: {
      require(c.tests >= 1, "tests must be >= 1");
      require(c.hulls >= 1 && c.hulls <= c.tests,
              "hulls must lie in [1, tests]");
      const auto grid =
          c.command == Command::kScan ? scan_grid(c)
                                      : std::vector<std::uint64_t>{c.n};
      require(grid.front() >= 1, "N must be >= 1");
      for (std::size_t g = 1; g < grid.size(); ++g) {
        require(grid[g] > grid[g - 1], "grid must be strictly ascending");
      }
      require(grid.back() <= experiments::kMaxHullPoints,
              "N exceeds the hull point cap of " +
                  std::to_string(experiments::kMaxHullPoints));
      break;
    }
    case Command::kTypical:
      require(c.tests >= 1, "tests must be >= 1");
      typical::TypicalSetParams(c.d, c.epsilon, c.gamma);
      break;
    case Command::kCaps:
      require(c.alpha > 0.0 && c.alpha <= 1.0, "alpha must lie in (0, 1]");
      require(c.budget >= 1, "budget must be >= 1");
      require(c.runs >= 1, "runs must be >= 1");
      break;
    case Command::kContain:
      require(c.d >= 2, "contain needs d >= 2");
      require(c.tests >= 1, "tests must be >= 1");
      require(c.alpha > 0.0 && c.alpha < 0.5, "alpha must lie in (0, 1/2)");
      typical::TypicalSetParams(c.d, c.epsilon, c.gamma);
      require(c.gamma <= 1.0 / 6.0, "hypothesis violated: gamma <= 1/6");
      require(2.0 * c.epsilon * c.gamma <= 5.0 * c.alpha,
              "hypothesis violated: 2 eps gamma <= 5 alpha");
      break;
    case Command::kBounds:
      require(c.delta > 0.0 && c.delta < 1.0, "delta must lie in (0, 1)");
      if (!c.euler) {
        typical::TypicalSetParams(c.d, c.epsilon, c.gamma);
        require(c.alpha > 0.0 && c.alpha < 0.5, "alpha must lie in (0, 1/2)");
      }
      break;
    case Command::kVerify:
      break;
  }
  if (c.out) {
    if (c.polytope) {
      require(!same_file(*c.out, *c.polytope),
              "output path would overwrite the polytope input");
    }
  }
}

int run(const RunConfig& input, std::ostream& out, std::ostream& err) {
  RunConfig c = input;
  BodySpec body = BodySpec::standard_simplex(1);
  try {
    validate(c);
    const bool uses_body = c.command == Command::kSample ||
                           c.command == Command::kCoverage ||
                           c.command == Command::kScan;
    if (uses_body) {
      body = make_body(c);
      c.d = body.dimension();
      if (c.cap) require(*c.cap < c.d, "cap index must be < d");
    }
  } catch (const std::exception& e) {
    emit_error(err, "invalid_config", e.what(), kExitInvalidConfig);
    return kExitInvalidConfig;
  }

  report::Header header;
  header.config = to_json(c);
  std::ostringstream buffer;
  int status = kExitOk;
  std::string failure;
  try {
    switch (c.command) {
      case Command::kSample:
        report::write_table(buffer, c.format, run_sample(c, body), header);
        break;
      case Command::kCoverage: {
        const auto e = experiments::estimate_coverage(
            body, coverage_config(c, c.n));
        if (experiments::indeterminate_exceeded(e)) {
          header.partial = true;
          status = kExitRuntime;
          failure = "indeterminate LP verdicts exceed 0.1% of tests";
        }
        report::write_coverage(buffer, c.format, {e}, header);
        break;
      }
      case Command::kScan: {
        auto curve = experiments::threshold_scan(
            body, scan_grid(c), coverage_config(c, 1), c.margin);
        for (std::size_t g = 0; g < curve.estimates.size(); ++g) {
          if (!experiments::indeterminate_exceeded(curve.estimates[g])) {
            continue;
          }
          curve.estimates.resize(g);
          header.partial = true;
          status = kExitRuntime;
          failure = "indeterminate LP verdicts exceed 0.1% of tests at N = " +
                    std::to_string(curve.grid[g]);
          break;
        }
        report::write_scan(buffer, c.format, curve, header);
        break;
      }
      case Command::kTypical:
        report::write_table(buffer, c.format, run_typical(c), header);
        break;
      case Command::kCaps:
        report::write_table(buffer, c.format, run_caps(c), header);
        break;
      case Command::kContain:
        report::write_table(buffer, c.format, run_contain(c), header);
        break;
      case Command::kBounds:
        report::write_table(buffer, c.format, run_bounds(c), header);
        break;
      case Command::kVerify: {
        bool passed = false;
        const auto t = run_verify(c, passed);
        report::write_table(buffer, c.format, t, header);
        if (!passed) {
          status = kExitRuntime;
          failure = "property suite reported failures";
        }
        break;
      }
    }
  } catch (const PartialFailure& e) {
    header.partial = true;
    buffer.str("");
    report::write_table(buffer, c.format, e.table, header);
    status = kExitRuntime;
    failure = e.what();
  } catch (const InvalidArgument& e) {
    emit_error(err, "invalid_config", e.what(), kExitInvalidConfig);
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    emit_error(err, "runtime_failure", e.what(), kExitRuntime);
    return kExitRuntime;
  }

  if (c.out) {
    std::ofstream file(*c.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      emit_error(err, "runtime_failure", "cannot write '" + *c.out + "'",
                 kExitRuntime);
      return kExitRuntime;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
    out.flush();
  }
  if (status != kExitOk) emit_error(err, "runtime_failure", failure, status);
  return status;
}

}  // namespace hullvol::cli
