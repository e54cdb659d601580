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

#ifndef HULLVOL_EXPERIMENTS_HPP_
#define HULLVOL_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullvol/bounds.hpp"
#include "hullvol/geometry.hpp"
#include "hullvol/sampling.hpp"
#include "hullvol/stats.hpp"

namespace hullvol::experiments {

// Hard cap on hull points held in memory by one run.
inline constexpr std::uint64_t kMaxHullPoints = 10'000'000;
// Share of indeterminate LP verdicts above which a coverage run fails.
inline constexpr double kMaxIndeterminateShare = 1e-3;

struct CoverageEstimate {
  std::string body;
  std::size_t d = 0;
  std::uint64_t n = 0;
  std::uint64_t test_points = 0;
  std::uint64_t hits = 0;
  double fraction = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t indeterminate = 0;
  std::uint64_t hulls = 1;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
};

struct CoverageConfig {
  std::uint64_t n = 1;            // hull points
  std::uint64_t test_points = 1;  // total test points
  // Independent hull replications; test points are split into contiguous
  // equal blocks, one block per hull. With hulls == test_points every test
  // point sees a fresh hull, which estimates E Vol(Q_N) / Vol(body).
  std::uint64_t hulls = 1;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  geometry::LpMembershipOptions lp;
  // When false, estimates over the indeterminate limit are returned rather
  // than raised; callers must then check indeterminate_exceeded themselves.
  bool fail_on_indeterminate = true;
};

// True when indeterminate LP verdicts exceed kMaxIndeterminateShare.
bool indeterminate_exceeded(const CoverageEstimate& estimate);

// Coverage of conv(q_1..q_N) measured by independent uniform test points.
// When `decisions` is given it receives one inside/outside flag per test.
CoverageEstimate estimate_coverage(const BodySpec& body,
                                   const CoverageConfig& config,
                                   std::vector<char>* decisions = nullptr);

struct ThresholdCurve {
  std::vector<std::uint64_t> grid;
  std::vector<CoverageEstimate> estimates;
  // Natural-log reference thresholds: (gamma_EM - eps) d and d log 300.
  bounds::ThresholdPrediction reference;
};

// Coverage along an ascending grid of N using nested prefixes of one point
// sequence per hull, so coverage is nondecreasing in N exactly.
ThresholdCurve threshold_scan(const BodySpec& body,
                              const std::vector<std::uint64_t>& grid,
                              const CoverageConfig& config,
                              double epsilon_margin = 0.0);

struct CapCollectionReport {
  double alpha = 0.0;
  std::size_t d = 0;
  // 1-based index of the first draw landing in each cap, if any.
  std::vector<std::optional<std::uint64_t>> waiting_times;
  std::optional<std::uint64_t> all_collected_at;
  std::uint64_t draws = 0;
};

// Streams uniform simplex points until every alpha-cap (alpha in (0, 1]) has been hit or the
// budget runs out. `run` selects an independent substream of `seed`.
CapCollectionReport cap_collection(std::size_t d, double alpha,
                                   std::uint64_t budget, std::uint64_t seed,
                                   std::uint64_t run = 0);

struct ContainmentConfig {
  std::size_t d = 10;
  double alpha = 3.0 / 100.0;
  double gamma = 1.0 / 6.0;
  double epsilon = 1.0 / 8.0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  // Per-draw resampling budgets; exceeding either discards the trial.
  std::uint64_t max_cap_attempts = 1'000'000;
  std::uint64_t max_typical_attempts = 1'000'000;
};

struct ContainmentReport {
  ContainmentConfig config;
  std::uint64_t completed = 0;
  std::uint64_t discarded = 0;
  // x in conv(p_1..p_d) given every cap point satisfies event A.
  std::uint64_t inside_given_a = 0;
  stats::Interval ci_given_a;
  double p_given_a = 0.0;
  // Same, restricted to trials where every event B also held.
  std::uint64_t trials_with_b = 0;
  std::uint64_t inside_given_ab = 0;
  double p_given_ab = 0.0;
  stats::Interval ci_given_ab;
  // Plain cap points without conditioning on A.
  std::uint64_t inside_unconditioned = 0;
  double p_unconditioned = 0.0;
  stats::Interval ci_unconditioned;
  // Neumann certificate bookkeeping.
  std::uint64_t certified = 0;
  std::uint64_t certified_but_outside = 0;
  std::uint64_t lp_indeterminate = 0;
  std::uint64_t events_abc_violations = 0;  // A and B but not C
  bounds::DeltaD delta;
  double mean_cap_attempts = 0.0;
};

ContainmentReport containment_experiment(const ContainmentConfig& config);

}  // namespace hullvol::experiments

#endif  // HULLVOL_EXPERIMENTS_HPP_
