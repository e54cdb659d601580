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

#include "hullvol/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "hullvol/errors.hpp"
#include "hullvol/geometry.hpp"

namespace hullvol::experiments {
namespace {

TEST(Coverage, SegmentWithThreePoints) {
  // For N uniform points on a segment the hull covers (N-1)/(N+1) on average.
  CoverageConfig c;
  c.n = 3;
  c.test_points = 40000;
  c.hulls = 40000;
  c.seed = 11;
  c.workers = 4;
  const auto est = estimate_coverage(BodySpec::standard_simplex(2), c);
  EXPECT_NEAR(est.fraction, 0.5, 0.015);
  EXPECT_LE(est.ci_low, est.fraction);
  EXPECT_GE(est.ci_high, est.fraction);
  EXPECT_EQ(est.test_points, 40000u);
  EXPECT_EQ(est.indeterminate, 0u);
}

TEST(Coverage, SinglePointCoversNothing) {
  CoverageConfig c;
  c.n = 1;
  c.test_points = 500;
  const auto est = estimate_coverage(BodySpec::hypercube(3), c);
  EXPECT_EQ(est.hits, 0u);
}

TEST(Coverage, WorkerCountDoesNotChangeDecisions) {
  CoverageConfig c;
  c.n = 40;
  c.test_points = 600;
  c.hulls = 3;
  c.seed = 5;
  std::vector<char> one, many;
  c.workers = 1;
  estimate_coverage(BodySpec::ball(4), c, &one);
  c.workers = 7;
  estimate_coverage(BodySpec::ball(4), c, &many);
  EXPECT_EQ(one, many);
  c.hulls = 600;
  std::vector<char> a, b;
  c.workers = 2;
  estimate_coverage(BodySpec::ball(4), c, &a);
  c.workers = 5;
  estimate_coverage(BodySpec::ball(4), c, &b);
  EXPECT_EQ(a, b);
}

TEST(Coverage, RejectsBadConfig) {
  CoverageConfig c;
  c.n = kMaxHullPoints + 1;
  c.test_points = 10;
  EXPECT_THROW(estimate_coverage(BodySpec::hypercube(2), c), InvalidArgument);
  c.n = 5;
  c.hulls = 11;
  EXPECT_THROW(estimate_coverage(BodySpec::hypercube(2), c), InvalidArgument);
  c.hulls = 0;
  EXPECT_THROW(estimate_coverage(BodySpec::hypercube(2), c), InvalidArgument);
}

TEST(Coverage, AffineImageKeepsDecisions) {
  Eigen::MatrixXd a(3, 3);
  a << 2.0, 0.3, 0.0, 0.0, 0.5, 0.1, 0.4, 0.0, 1.5;
  Eigen::VectorXd b(3);
  b << 1.0, -2.0, 0.5;
  const auto base = BodySpec::polytope(
      geometry::make_polytope_body(geometry::cross_polytope(3)));
  const auto mapped = BodySpec::polytope(geometry::make_polytope_body(
      geometry::affine_image(geometry::cross_polytope(3), a, b)));
  CoverageConfig c;
  c.n = 15;
  c.test_points = 2000;
  c.seed = 3;
  std::vector<char> d1, d2;
  estimate_coverage(base, c, &d1);
  estimate_coverage(mapped, c, &d2);
  EXPECT_EQ(d1, d2);
}

TEST(ThresholdScan, MonotoneInN) {
  CoverageConfig c;
  c.test_points = 1000;
  c.hulls = 2;
  c.seed = 9;
  c.workers = 3;
  const std::vector<std::uint64_t> grid = {5, 10, 20, 40, 80, 160};
  const auto curve = threshold_scan(BodySpec::standard_simplex(4), grid, c);
  ASSERT_EQ(curve.estimates.size(), grid.size());
  for (std::size_t k = 1; k < grid.size(); ++k) {
    EXPECT_GE(curve.estimates[k].hits, curve.estimates[k - 1].hits);
    EXPECT_EQ(curve.estimates[k].n, grid[k]);
  }
  EXPECT_NEAR(curve.reference.log_lower, 0.5772156649 * 4, 1e-8);
}

TEST(ThresholdScan, MatchesIndependentCoverageRuns) {
  CoverageConfig c;
  c.test_points = 300;
  c.seed = 4;
  const std::vector<std::uint64_t> grid = {8, 30};
  const auto curve = threshold_scan(BodySpec::hypercube(3), grid, c);
  // The grid's largest hull is the common sequence; a plain run at that size
  // sees the same hull and the same tests.
  c.n = 30;
  EXPECT_EQ(estimate_coverage(BodySpec::hypercube(3), c).hits,
            curve.estimates[1].hits);
}

TEST(ThresholdScan, RejectsBadGrid) {
  CoverageConfig c;
  c.test_points = 10;
  EXPECT_THROW(threshold_scan(BodySpec::hypercube(2), {}, c), InvalidArgument);
  EXPECT_THROW(threshold_scan(BodySpec::hypercube(2), {5, 5}, c),
               InvalidArgument);
  EXPECT_THROW(threshold_scan(BodySpec::hypercube(2), {9, 3}, c),
               InvalidArgument);
}

TEST(CapCollection, WaitingTimesAreGeometric) {
  // Each cap has probability alpha^(d-1), so waiting times are geometric.
  for (auto [d, alpha] : {std::pair<std::size_t, double>{2, 0.5}, {6, 0.5}}) {
    const double p = std::pow(alpha, static_cast<double>(d - 1));
    double sum = 0.0, sum2 = 0.0;
    int count = 0;
    for (std::uint64_t run = 0; run < 400; ++run) {
      const auto r = cap_collection(d, alpha, 100000, 21, run);
      ASSERT_TRUE(r.all_collected_at.has_value());
      for (const auto& w : r.waiting_times) {
        sum += static_cast<double>(*w);
        sum2 += static_cast<double>(*w) * static_cast<double>(*w);
        ++count;
      }
    }
    const double mean = sum / count;
    const double var = sum2 / count - mean * mean;
    EXPECT_NEAR(mean, 1.0 / p, 0.1 / p) << "d=" << d;
    EXPECT_NEAR(var, (1.0 - p) / (p * p), 0.25 * (1.0 - p) / (p * p) + 0.1)
        << "d=" << d;
  }
}

TEST(CapCollection, TinyBudgetCollectsNothingUseful) {
  const auto r = cap_collection(20, 0.1, 5, 1);
  EXPECT_FALSE(r.all_collected_at.has_value());
  EXPECT_EQ(r.draws, 5u);
  EXPECT_THROW(cap_collection(5, 0.0, 10, 1), InvalidArgument);
}

TEST(Containment, SmallRunIsConsistent) {
  ContainmentConfig c;
  c.d = 10;
  c.trials = 150;
  c.seed = 2;
  c.workers = 4;
  const auto r = containment_experiment(c);
  EXPECT_EQ(r.completed + r.discarded, c.trials);
  EXPECT_GT(r.completed, 0u);
  EXPECT_EQ(r.certified_but_outside, 0u);
  EXPECT_EQ(r.events_abc_violations, 0u);
  EXPECT_LE(r.certified, r.inside_given_a);
  EXPECT_GT(r.p_given_a, 0.0);
  EXPECT_GE(r.p_given_a, std::max(0.0, r.delta.value) - 0.05);
  EXPECT_TRUE(r.delta.vacuous);
  EXPECT_GE(r.mean_cap_attempts, 1.0);
  EXPECT_LE(r.ci_given_a.low, r.p_given_a);
  EXPECT_GE(r.ci_given_a.high, r.p_given_a);
}

TEST(Containment, ReproducibleAcrossWorkers) {
  ContainmentConfig c;
  c.d = 8;
  c.trials = 40;
  c.seed = 6;
  c.workers = 1;
  const auto a = containment_experiment(c);
  c.workers = 5;
  const auto b = containment_experiment(c);
  EXPECT_EQ(a.inside_given_a, b.inside_given_a);
  EXPECT_EQ(a.inside_unconditioned, b.inside_unconditioned);
  EXPECT_EQ(a.trials_with_b, b.trials_with_b);
}

TEST(Containment, RejectsViolatedHypotheses) {
  ContainmentConfig c;
  c.gamma = 0.2;
  EXPECT_THROW(containment_experiment(c), InvalidArgument);
  c.gamma = 1.0 / 6.0;
  c.alpha = 0.5;
  EXPECT_THROW(containment_experiment(c), InvalidArgument);
  c.alpha = 0.001;
  c.epsilon = 0.125;
  EXPECT_THROW(containment_experiment(c), InvalidArgument);
}

}  // namespace
}  // namespace hullvol::experiments
