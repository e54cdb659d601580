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

#include "hullvol/typical_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "hullvol/bounds.hpp"
#include "hullvol/errors.hpp"

namespace hullvol::typical {
namespace {

// Rejection-samples a uniform simplex point in the typical set.
SimplexPoint typical_point(const TypicalSetParams& params, RandomStream& s) {
  for (;;) {
    auto x = sampling::sample_standard_simplex(params.dimension(), s);
    if (in_typical_set(x.coords, params)) return x;
  }
}

TEST(RankMaps, HandExample) {
  const std::vector<double> x = {0.5, 0.2, 0.3};
  const auto m = rank_maps(x);
  // 1-based ranks (3, 1, 2) and inverse (2, 3, 1), shifted to 0-based.
  EXPECT_EQ(m.rank, (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_EQ(m.index, (std::vector<std::size_t>{1, 2, 0}));
}

TEST(RankMaps, TiesFollowIndexOrder) {
  const std::vector<double> x(6, 1.0 / 6.0);
  const auto m = rank_maps(x);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(m.rank[i], i);
    EXPECT_EQ(m.index[i], i);
  }
}

TEST(RankMaps, InverseOnRandomPoints) {
  RandomStream s(1, 0);
  for (int k = 0; k < 1000; ++k) {
    const auto x = sampling::sample_standard_simplex(9, s);
    const auto m = rank_maps(x.coords);
    for (std::size_t i = 0; i < 9; ++i) ASSERT_EQ(m.index[m.rank[i]], i);
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = 0; j < 9; ++j) {
        if (m.rank[i] <= m.rank[j]) ASSERT_LE(x.coords[i], x.coords[j]);
      }
    }
  }
}

TEST(Params, ProfileAndCutoffs) {
  const TypicalSetParams p(100, 1.0 / 8.0, 1.0 / 6.0);
  EXPECT_EQ(p.small_ranks(), 16u);
  EXPECT_EQ(p.sqrt_cutoff(), 10u);
  ASSERT_EQ(p.profile().size(), 100u);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_DOUBLE_EQ(p.profile()[i], std::exp(-10.0));
  }
  for (std::size_t i = 10; i < 100; ++i) EXPECT_EQ(p.profile()[i], 0.125);
  EXPECT_DOUBLE_EQ(p.small_threshold(3), std::exp(-10.0) * 3.0 / 1e4);
  EXPECT_DOUBLE_EQ(p.small_threshold(12), 0.125 * 12.0 / 1e4);
  EXPECT_DOUBLE_EQ(p.bulk_threshold(), 1.0 / 1200.0);
}

TEST(Params, RejectsOutOfRangeConstants) {
  EXPECT_THROW(TypicalSetParams(10, 0.2, 0.1), InvalidArgument);
  EXPECT_THROW(TypicalSetParams(10, 0.0, 0.1), InvalidArgument);
  EXPECT_THROW(TypicalSetParams(10, 0.1, 1.0), InvalidArgument);
  EXPECT_THROW(TypicalSetParams(0, 0.1, 0.1), InvalidArgument);
}

TEST(InTypicalSet, BarycenterIsTypical) {
  const TypicalSetParams p(100);
  const std::vector<double> x(100, 0.01);
  EXPECT_TRUE(in_typical_set(x, p));
}

TEST(InTypicalSet, VertexIsNot) {
  const TypicalSetParams p(100);
  std::vector<double> x(100, 0.0);
  x[0] = 1.0;
  EXPECT_FALSE(in_typical_set(x, p));
}

TEST(InTypicalSet, BoundaryIsInclusive) {
  const TypicalSetParams p(100);
  std::vector<double> x(100);
  x[0] = p.small_threshold(1);
  for (std::size_t i = 1; i < 100; ++i) x[i] = (1.0 - x[0]) / 99.0;
  EXPECT_TRUE(in_typical_set(x, p));
  x[0] = std::nextafter(x[0], 0.0);
  EXPECT_FALSE(in_typical_set(x, p));
}

TEST(InTypicalSet, BulkThresholdBinds) {
  const TypicalSetParams p(60);  // small ranks 1..10, bulk from rank 11
  std::vector<double> x(60, 1.0 / 60.0);
  // Rank 11 sits below gamma / (2d) while ranks 1..10 clear their bounds.
  for (std::size_t i = 0; i < 11; ++i) x[i] = 0.5 * p.bulk_threshold();
  double rest = 1.0 - 11 * x[0];
  for (std::size_t i = 11; i < 60; ++i) x[i] = rest / 49.0;
  EXPECT_FALSE(in_typical_set(x, p));
  for (std::size_t i = 0; i < 10; ++i) x[i] = 0.5 * p.bulk_threshold();
  x[10] = p.bulk_threshold();
  rest = 1.0 - 10 * x[0] - x[10];
  for (std::size_t i = 11; i < 60; ++i) x[i] = rest / 49.0;
  EXPECT_TRUE(in_typical_set(x, p));
}

TEST(InTypicalSet, PermutationInvariant) {
  const TypicalSetParams p(30);
  RandomStream s(2, 0);
  for (int k = 0; k < 2000; ++k) {
    auto x = sampling::sample_standard_simplex(30, s).coords;
    const bool before = in_typical_set(x, p);
    std::reverse(x.begin(), x.end());
    std::rotate(x.begin(), x.begin() + 7, x.end());
    ASSERT_EQ(in_typical_set(x, p), before);
  }
}

TEST(TypicalVolume, VacuousConstraintsGiveOne) {
  // gamma d < 1 so no small ranks bind, and gamma / (2d) is far below the
  // smallest coordinate any of these draws will produce.
  const TypicalSetParams p(5, 0.1, 1e-12);
  ASSERT_EQ(p.small_ranks(), 0u);
  RandomStream s(3, 0);
  const auto e = estimate_typical_volume(p, 10000, s);
  EXPECT_EQ(e.hits, e.trials);
  EXPECT_EQ(e.fraction, 1.0);
}

TEST(TypicalVolume, EstimatorContractAtD50) {
  const TypicalSetParams p(50);
  RandomStream s(4, 0);
  const auto e = estimate_typical_volume(p, 100000, s);
  EXPECT_GE(e.fraction, 0.0);
  EXPECT_LE(e.fraction, 1.0);
  EXPECT_LT(e.ci.high - e.ci.low, 0.01);
  EXPECT_LE(e.ci.low, e.fraction);
  EXPECT_GE(e.ci.high, e.fraction);
}

TEST(TypicalVolume, NonDecreasingFrom100To400) {
  RandomStream s(5, 0), t(5, 1);
  const auto e100 = estimate_typical_volume(TypicalSetParams(100), 20000, s);
  const auto e400 = estimate_typical_volume(TypicalSetParams(400), 20000, t);
  EXPECT_GE(e400.ci.high, e100.ci.low);
  // The asymptotic floor 1 - exp(-(3/8) sqrt(d)) is checked only as a trend:
  // it increases with d, and so should the estimate within its interval.
  const double floor100 = 1.0 - std::exp(-0.375 * 10.0);
  const double floor400 = 1.0 - std::exp(-0.375 * 20.0);
  EXPECT_LT(floor100, floor400);
  EXPECT_GE(e400.fraction + (e400.ci.high - e400.ci.low), e100.fraction);
}

TEST(Events, ConstructedAllTrue) {
  const std::size_t d = 30;
  const TypicalSetParams p(d);
  RandomStream s(6, 0);
  const auto x = typical_point(p, s);
  const auto maps = rank_maps(x.coords);
  std::vector<double> e(d, 10.0);
  for (std::size_t r = 0; r < p.small_ranks(); ++r) e[maps.index[r]] = 1e-12;
  const std::size_t cap = maps.index[d - 1];
  const auto ev = goodpi_events(x.coords, cap, e, 0.03, p);
  EXPECT_TRUE(ev.A);
  EXPECT_TRUE(ev.B);
  EXPECT_TRUE(ev.C);
  EXPECT_EQ(ev.b_threshold, 24.0);
}

TEST(Events, LargeRankOneDrawBreaksA) {
  const std::size_t d = 30;
  const TypicalSetParams p(d);
  RandomStream s(7, 0);
  const auto x = typical_point(p, s);
  const auto maps = rank_maps(x.coords);
  std::vector<double> e(d, 10.0);
  for (std::size_t r = 0; r < p.small_ranks(); ++r) e[maps.index[r]] = 1e-12;
  const std::size_t rank1 = maps.index[0];
  const double threshold = 2.0 * p.profile()[0] / (5.0 * d);
  e[rank1] = 2.0 * threshold / 0.03;
  const auto ev = goodpi_events(x.coords, maps.index[d - 1], e, 0.03, p);
  EXPECT_FALSE(ev.A);
  EXPECT_NEAR(ev.a_thresholds[0], threshold, 1e-18);
}

TEST(Events, CapCoordinateRankIsUnconstrained) {
  const std::size_t d = 30;
  const TypicalSetParams p(d);
  RandomStream s(8, 0);
  const auto x = typical_point(p, s);
  const auto maps = rank_maps(x.coords);
  std::vector<double> e(d, 10.0);
  for (std::size_t r = 0; r < p.small_ranks(); ++r) e[maps.index[r]] = 1e-12;
  const std::size_t cap = maps.index[0];
  e[cap] = 1e6;  // huge, but on the cap coordinate it does not matter
  const auto ev = goodpi_events(x.coords, cap, e, 0.03, p);
  EXPECT_TRUE(ev.A);
  EXPECT_TRUE(std::isnan(ev.a_thresholds[0]));
}

TEST(Events, HypothesisViolationsNamed) {
  const std::size_t d = 30;
  RandomStream s(9, 0);
  const TypicalSetParams ok(d);
  const auto x = typical_point(ok, s);
  const std::vector<double> e(d, 1.0);
  try {
    goodpi_events(x.coords, 0, e, 0.03, TypicalSetParams(d, 0.125, 0.2));
    FAIL();
  } catch (const InvalidArgument& err) {
    EXPECT_NE(std::string(err.what()).find("gamma <= 1/6"), std::string::npos);
  }
  try {
    goodpi_events(x.coords, 0, e, 0.001, ok);
    FAIL();
  } catch (const InvalidArgument& err) {
    EXPECT_NE(std::string(err.what()).find("2 eps gamma <= 5 alpha"),
              std::string::npos);
  }
  std::vector<double> vertex(d, 0.0);
  vertex[0] = 1.0;
  EXPECT_THROW(goodpi_events(vertex, 0, e, 0.03, ok), InvalidArgument);
}

TEST(Events, NoABWithoutCAtD30BothKernels) {
  const std::size_t d = 30;
  const TypicalSetParams p(d);
  RandomStream s(10, 0);
  const auto x = typical_point(p, s);
  for (int k = 0; k < 20000; ++k) {
    std::vector<double> e(d);
    for (auto& v : e) v = s.exponential();
    const std::size_t cap = static_cast<std::size_t>(k) % d;
    for (auto kernel : {sampling::CapKernel::kUniform,
                        sampling::CapKernel::kWeightedDenominator}) {
      const auto ev = goodpi_events(x.coords, cap, e, 0.03, p, kernel);
      ASSERT_FALSE(ev.A && ev.B && !ev.C);
    }
  }
}

// Unconditioned A is far too rare at d = 30 to exercise the implication, so
// draw the constrained exponentials from their law given A (truncated
// exponentials) and the rest freely.
TEST(Events, ABImpliesCUnderConditionedDraws) {
  const std::size_t d = 30;
  const double alpha = 0.03;
  const TypicalSetParams p(d);
  RandomStream s(13, 0);
  std::uint64_t ab = 0, not_b = 0;
  for (int k = 0; k < 20000; ++k) {
    const auto x = typical_point(p, s);
    const auto maps = rank_maps(x.coords);
    const std::size_t cap = static_cast<std::size_t>(k) % d;
    std::vector<double> e(d);
    for (auto& v : e) v = s.exponential();
    for (std::size_t r = 0; r < p.small_ranks(); ++r) {
      const std::size_t c = maps.index[r];
      if (c == cap) continue;
      const double t = 2.0 * p.profile()[r] * static_cast<double>(r + 1) /
                       (5.0 * d) / alpha;
      e[c] = -std::log1p(-s.uniform_open() * -std::expm1(-t));
    }
    for (auto kernel : {sampling::CapKernel::kUniform,
                        sampling::CapKernel::kWeightedDenominator}) {
      const auto ev = goodpi_events(x.coords, cap, e, alpha, p, kernel);
      ASSERT_TRUE(ev.A);
      if (!ev.B) {
        ++not_b;
        continue;
      }
      ++ab;
      ASSERT_TRUE(ev.C);
    }
  }
  EXPECT_GT(ab, 10000u);
  EXPECT_GT(not_b, 0u);
}

TEST(Events, EmpiricalAAboveLowerBoundAtD10) {
  const std::size_t d = 10;
  const TypicalSetParams p(d);
  RandomStream s(11, 0);
  const auto x = typical_point(p, s);
  const int n = 100000;
  int hits = 0;
  for (int k = 0; k < n; ++k) {
    std::vector<double> e(d);
    for (auto& v : e) v = s.exponential();
    hits += goodpi_events(x.coords, k % d, e, 0.03, p).A;
  }
  EXPECT_GE(static_cast<double>(hits) / n, event_a_lower_bound(0.03, p));
}

TEST(Events, EmpiricalBAboveJansonEvaluation) {
  const std::size_t d = 60;
  const TypicalSetParams p(d);
  RandomStream s(12, 0);
  const auto x = typical_point(p, s);
  const auto maps = rank_maps(x.coords);
  const int n = 50000;
  int hits = 0;
  const std::size_t cap = maps.index[d - 1];
  for (int k = 0; k < n; ++k) {
    std::vector<double> e(d);
    for (auto& v : e) v = s.exponential();
    hits += goodpi_events(x.coords, cap, e, 0.03, p).B;
  }
  // The sum runs over the d - floor(gamma d) - 1 bulk coordinates off the cap.
  const std::size_t summands = d - p.small_ranks() - 1;
  const double bound = bounds::event_b_lower_bound(summands, d);
  EXPECT_GT(bound, 0.0);
  EXPECT_GE(static_cast<double>(hits) / n, bound);
}

TEST(Events, ALowerBoundClosedForm) {
  const TypicalSetParams p(10);
  const double base = 0.125 / 6.0 / (5.0 * std::exp(1.0) * 0.03);
  const double expected = 0.1 * std::pow(base, 10.0 / 6.0) * std::exp(-10.0);
  EXPECT_NEAR(event_a_lower_bound(0.03, p), expected, 1e-12 * expected);
}

}  // namespace
}  // namespace hullvol::typical
