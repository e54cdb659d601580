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

#include "hullvol/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "hullvol/random_stream.hpp"

namespace hullvol::stats {
namespace {

TEST(Wilson, HandComputedInterval) {
  // 5 of 10 at z = 1.96: centre 0.5, half-width
  // z sqrt(p q / n + z^2 / 4n^2) / (1 + z^2 / n).
  const double z = 1.959963984540054;
  const double denom = 1.0 + z * z / 10.0;
  const double half = z * std::sqrt(0.025 + z * z / 400.0) / denom;
  const auto ci = wilson_interval(5, 10);
  EXPECT_NEAR(ci.low, 0.5 - half, 1e-12);
  EXPECT_NEAR(ci.high, 0.5 + half, 1e-12);
  EXPECT_NEAR(ci.low, 0.2366, 1e-4);
}

TEST(Wilson, EdgesStayInUnitInterval) {
  const auto zero = wilson_interval(0, 100);
  EXPECT_EQ(zero.low, 0.0);
  EXPECT_GT(zero.high, 0.0);
  const auto all = wilson_interval(100, 100);
  EXPECT_EQ(all.high, 1.0);
  EXPECT_LT(all.low, 1.0);
}

TEST(Wilson, NarrowsWithTrials) {
  const auto a = wilson_interval(30, 100);
  const auto b = wilson_interval(3000, 10000);
  EXPECT_LT(b.high - b.low, a.high - a.low);
}

TEST(Kolmogorov, KnownTailValues) {
  EXPECT_NEAR(kolmogorov_q(1.0), 0.26999967, 1e-6);
  EXPECT_NEAR(kolmogorov_q(1.36), 0.0494, 1e-3);
  EXPECT_EQ(kolmogorov_q(0.0), 1.0);
  EXPECT_LT(kolmogorov_q(5.0), 1e-20);
}

TEST(KsOneSample, UniformPassesShiftedFails) {
  RandomStream s(1, 0);
  std::vector<double> u, shifted;
  for (int k = 0; k < 5000; ++k) {
    const double v = s.uniform();
    u.push_back(v);
    shifted.push_back(v * v);
  }
  auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_GT(ks_one_sample(u, cdf).p_value, 0.001);
  EXPECT_LT(ks_one_sample(shifted, cdf).p_value, 1e-6);
}

TEST(KsOneSample, StatisticOfSingleSample) {
  auto cdf = [](double x) { return x; };
  EXPECT_NEAR(ks_one_sample({0.3}, cdf).statistic, 0.7, 1e-15);
}

TEST(KsTwoSample, SameLawPassesDifferentLawFails) {
  RandomStream s(2, 0);
  std::vector<double> a, b, c;
  for (int k = 0; k < 4000; ++k) {
    a.push_back(s.exponential());
    b.push_back(s.exponential());
    c.push_back(1.2 * s.exponential());
  }
  EXPECT_GT(ks_two_sample(a, b).p_value, 0.001);
  EXPECT_LT(ks_two_sample(a, c).p_value, 1e-4);
}

TEST(KsTwoSample, DisjointSupportsHaveStatisticOne) {
  EXPECT_NEAR(ks_two_sample({1, 2, 3}, {4, 5, 6}).statistic, 1.0, 1e-15);
}

TEST(MeanVariance, HandComputed) {
  const std::vector<double> v = {1, 2, 3, 4};
  const auto mv = mean_variance(v);
  EXPECT_DOUBLE_EQ(mv.mean, 2.5);
  EXPECT_DOUBLE_EQ(mv.variance, 5.0 / 3.0);
  EXPECT_NEAR(mv.standard_error(), std::sqrt(5.0 / 12.0), 1e-15);
}

}  // namespace
}  // namespace hullvol::stats
