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

#include "hullvol/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "hullvol/errors.hpp"
#include "hullvol/stats.hpp"

namespace hullvol {
namespace {

constexpr double kTight = 1e-15;

TEST(SimplexKernel, ExponentialsNormalise) {
  const std::vector<double> e = {1.0, 2.0, 1.0};
  const auto q = sampling::simplex_from_exponentials(e);
  EXPECT_NEAR(q.coords[0], 0.25, kTight);
  EXPECT_NEAR(q.coords[1], 0.5, kTight);
  EXPECT_NEAR(q.coords[2], 0.25, kTight);
}

TEST(SimplexKernel, RejectsZeroDimension) {
  RandomStream s(1, 0);
  EXPECT_THROW(sampling::sample_standard_simplex(0, s), InvalidArgument);
  EXPECT_THROW(sampling::simplex_from_exponentials({}), InvalidArgument);
}

TEST(CapKernel, WeightedDenominatorFormHandComputedPoint) {
  // Denominator 1 + 1 + 0.5 = 2.5; off-diagonal 0.5 / 2.5; diagonal
  // 0.5 + 0.25 / 2.5.
  const std::vector<double> e = {1.0, 1.0, 1.0};
  const auto p = sampling::cap_from_exponentials(0, 0.5, e,
                                                 sampling::CapKernel::kWeightedDenominator);
  EXPECT_NEAR(p.coords[0], 0.6, kTight);
  EXPECT_NEAR(p.coords[1], 0.2, kTight);
  EXPECT_NEAR(p.coords[2], 0.2, kTight);
}

TEST(CapKernel, UniformFormHandComputedPoint) {
  // (1 - alpha) e_0 + alpha (1/3, 1/3, 1/3).
  const std::vector<double> e = {1.0, 1.0, 1.0};
  const auto p = sampling::cap_from_exponentials(0, 0.5, e);
  EXPECT_NEAR(p.coords[0], 0.5 + 0.5 / 3.0, kTight);
  EXPECT_NEAR(p.coords[1], 0.5 / 3.0, kTight);
  EXPECT_NEAR(p.coords[2], 0.5 / 3.0, kTight);
}

TEST(CapKernel, BothFormsLandInCap) {
  RandomStream s(14, 0);
  for (auto kernel : {sampling::CapKernel::kUniform,
                      sampling::CapKernel::kWeightedDenominator}) {
    for (int k = 0; k < 2000; ++k) {
      std::vector<double> e(6);
      for (auto& v : e) v = s.exponential();
      const auto p = sampling::cap_from_exponentials(2, 0.3, e, kernel);
      ASSERT_TRUE(on_standard_simplex(p.coords, 1e-12));
      ASSERT_GE(p.coords[2], 0.7);
    }
  }
}

// The weighted-denominator form is kept for reference only; its law differs from the
// conditional law on the cap and a KS test detects that at this size.
TEST(CapKernel, WeightedDenominatorFormIsNotUniformOnCap) {
  const std::size_t d = 5;
  const double alpha = 0.4;
  RandomStream a(15, 0), b(15, 1);
  std::vector<double> weighted, reject;
  for (int k = 0; k < 10000; ++k) {
    std::vector<double> e(d);
    for (auto& v : e) v = a.exponential();
    weighted.push_back(sampling::cap_from_exponentials(
                        0, alpha, e, sampling::CapKernel::kWeightedDenominator)
                        .coords[0]);
    reject.push_back(
        sampling::sample_cap_rejection(d, 0, alpha, 100000, b).coords[0]);
  }
  EXPECT_LT(stats::ks_two_sample(weighted, reject).p_value, 1e-6);
}

TEST(CapSampler, RejectsAlphaOutsideDisjointRange) {
  RandomStream s(1, 0);
  EXPECT_THROW(sampling::sample_cap(3, 0, 0.5, s), InvalidArgument);
  EXPECT_THROW(sampling::sample_cap(3, 0, 0.0, s), InvalidArgument);
  EXPECT_THROW(sampling::sample_cap(3, 3, 0.2, s), InvalidArgument);
}

TEST(CapSampler, OutputsLieInCap) {
  RandomStream s(2, 0);
  for (int k = 0; k < 5000; ++k) {
    const std::size_t cap = static_cast<std::size_t>(k % 7);
    const auto p = sampling::sample_cap(7, cap, 0.2, s);
    ASSERT_TRUE(on_standard_simplex(p.coords, 1e-12));
    ASSERT_GE(p.coords[cap], 0.8);
  }
}

TEST(OrderStatistics, HandComputedVector) {
  // g = (1, 1): E(1) = 1, E(2) = 1/2, total 2.
  const std::vector<double> g = {1.0, 1.0};
  const auto o = sampling::order_statistics_from_exponentials(g);
  EXPECT_NEAR(o[0], 0.25, kTight);
  EXPECT_NEAR(o[1], 0.75, kTight);
}

TEST(OrderStatistics, SortedAndOnSimplex) {
  RandomStream s(3, 0);
  for (int k = 0; k < 2000; ++k) {
    const auto o = sampling::sample_order_statistics(9, s);
    ASSERT_TRUE(std::is_sorted(o.begin(), o.end()));
    ASSERT_TRUE(on_standard_simplex(o, 1e-12));
  }
}

TEST(OrderStatistics, RankMarginalsMatchSortedUniformPoints) {
  const std::size_t d = 6;
  const int n = 20000;
  RandomStream a(4, 0), b(4, 1);
  std::vector<std::vector<double>> sorted(d), direct(d);
  for (int k = 0; k < n; ++k) {
    auto q = sampling::sample_standard_simplex(d, a).coords;
    std::sort(q.begin(), q.end());
    const auto o = sampling::sample_order_statistics(d, b);
    for (std::size_t r = 0; r < d; ++r) {
      sorted[r].push_back(q[r]);
      direct[r].push_back(o[r]);
    }
  }
  for (std::size_t r = 0; r < d; ++r) {
    EXPECT_GT(stats::ks_two_sample(sorted[r], direct[r]).p_value, 0.01)
        << "rank " << r;
  }
}

TEST(SimplexSampler, FirstCoordinateIsBetaOneNine) {
  const std::size_t d = 10;
  RandomStream s(5, 0);
  std::vector<double> x(100000);
  for (auto& v : x) v = sampling::sample_standard_simplex(d, s).coords[0];
  const auto ks = stats::ks_one_sample(x, [](double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return 1.0 - std::pow(1.0 - t, 9.0);
  });
  EXPECT_GT(ks.p_value, 0.01);
}

TEST(CapHitRate, MatchesAlphaPowerAtD6) {
  const std::size_t d = 6;
  const double alpha = 0.4;
  const int n = 200000;
  RandomStream s(6, 0);
  int hits = 0;
  for (int k = 0; k < n; ++k) {
    hits += sampling::sample_standard_simplex(d, s).coords[0] >= 1.0 - alpha;
  }
  const double p = std::pow(alpha, d - 1);
  const double sigma = std::sqrt(p * (1 - p) / n);
  EXPECT_NEAR(static_cast<double>(hits) / n, p, 3 * sigma);
}

TEST(CapRejection, AcceptanceAtD2IsOneHalf) {
  RandomStream s(7, 0);
  double total = 0.0;
  const int runs = 20000;
  for (int k = 0; k < runs; ++k) {
    std::uint64_t used = 0;
    const auto p = sampling::sample_cap_rejection(2, 0, 0.5, 1000, s, &used);
    ASSERT_GE(p.coords[0], 0.5);
    total += static_cast<double>(used);
  }
  // Geometric(1/2): mean 2, variance 2.
  EXPECT_NEAR(total / runs, 2.0, 3 * std::sqrt(2.0 / runs));
}

TEST(CapRejection, ReportsExhaustion) {
  RandomStream s(8, 0);
  try {
    sampling::sample_cap_rejection(30, 0, 0.01, 5, s);
    FAIL() << "expected AttemptsExhausted";
  } catch (const AttemptsExhausted& e) {
    EXPECT_EQ(e.attempts(), 5u);
  }
}

TEST(CapLaw, DirectMatchesRejectionAtD5) {
  const std::size_t d = 5;
  const double alpha = 0.4;
  RandomStream a(9, 0), b(9, 1);
  std::vector<double> direct0, direct1, reject0, reject1;
  for (int k = 0; k < 10000; ++k) {
    const auto p = sampling::sample_cap(d, 0, alpha, a);
    const auto q = sampling::sample_cap_rejection(d, 0, alpha, 100000, b);
    direct0.push_back(p.coords[0]);
    direct1.push_back(p.coords[1]);
    reject0.push_back(q.coords[0]);
    reject1.push_back(q.coords[1]);
  }
  EXPECT_GT(stats::ks_two_sample(direct0, reject0).p_value, 0.01);
  EXPECT_GT(stats::ks_two_sample(direct1, reject1).p_value, 0.01);
}

TEST(BodySampler, HypercubeSupport) {
  RandomStream s(10, 0);
  const auto body = BodySpec::hypercube(4);
  for (int k = 0; k < 10000; ++k) {
    for (double v : sampling::sample_body(body, s)) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
}

TEST(BodySampler, OrthogonalSimplexSupport) {
  RandomStream s(11, 0);
  const auto body = BodySpec::orthogonal_simplex(5);
  for (int k = 0; k < 10000; ++k) {
    const auto x = sampling::sample_body(body, s);
    ASSERT_EQ(x.size(), 5u);
    for (double v : x) ASSERT_GE(v, 0.0);
    ASSERT_LE(std::accumulate(x.begin(), x.end(), 0.0), 1.0);
  }
}

TEST(BodySampler, BallSupportAndSecondMoment) {
  RandomStream s(12, 0);
  const auto body = BodySpec::ball(3);
  const int n = 100000;
  std::vector<double> r2(n);
  for (auto& v : r2) {
    const auto x = sampling::sample_body(body, s);
    v = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    ASSERT_LE(v, 1.0 + 1e-12);
  }
  const auto mv = stats::mean_variance(r2);
  // E|X|^2 = d / (d + 2) for the uniform ball.
  EXPECT_NEAR(mv.mean, 0.6, 3 * mv.standard_error());
}

TEST(BodySpec, PayloadPresentExactlyForPolytopes) {
  EXPECT_THROW(BodySpec::of_kind(BodyKind::kSimplicialPolytope, 3),
               InvalidArgument);
  EXPECT_THROW(BodySpec::polytope(nullptr), InvalidArgument);
  EXPECT_THROW(BodySpec::hypercube(0), InvalidArgument);
  EXPECT_EQ(BodySpec::ball(4).dimension(), 4u);
}

TEST(BodySpec, KindNamesRoundTrip) {
  for (auto kind : {BodyKind::kStandardSimplex, BodyKind::kOrthogonalSimplex,
                    BodyKind::kHypercube, BodyKind::kBall,
                    BodyKind::kSimplicialPolytope}) {
    EXPECT_EQ(parse_body_kind(body_kind_name(kind)), kind);
  }
  EXPECT_THROW(parse_body_kind("sphere"), InvalidArgument);
}

TEST(Determinism, SameStreamSamePoints) {
  RandomStream a(13, 99), b(13, 99);
  for (int k = 0; k < 100; ++k) {
    ASSERT_EQ(sampling::sample_standard_simplex(8, a).coords,
              sampling::sample_standard_simplex(8, b).coords);
  }
}

}  // namespace
}  // namespace hullvol
