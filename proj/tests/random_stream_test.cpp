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

#include "hullvol/random_stream.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hullvol/stats.hpp"

namespace hullvol {
namespace {

TEST(RandomStream, SameKeyReproducesSequence) {
  RandomStream a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a(), b());
}

TEST(RandomStream, DifferentKeysDiverge) {
  RandomStream a(42, 7), b(42, 8), c(43, 7);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a();
    same_ab += x == b();
    same_ac += x == c();
  }
  EXPECT_EQ(same_ab, 0);
  EXPECT_EQ(same_ac, 0);
}

TEST(RandomStream, InterleavingDoesNotMatter) {
  // Draw two streams alternately and sequentially; the values must match.
  RandomStream a1(5, 1), b1(5, 2);
  std::vector<double> a_seq, b_seq;
  for (int i = 0; i < 100; ++i) a_seq.push_back(a1.exponential());
  for (int i = 0; i < 100; ++i) b_seq.push_back(b1.exponential());
  RandomStream a2(5, 1), b2(5, 2);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(b2.exponential(), b_seq[i]);
    EXPECT_EQ(a2.exponential(), a_seq[i]);
  }
}

TEST(RandomStream, SubstreamDomainsAreDisjoint) {
  std::set<std::uint64_t> ids;
  for (auto domain : {StreamDomain::kGeneral, StreamDomain::kHullPoints,
                      StreamDomain::kTestPoints, StreamDomain::kDirections,
                      StreamDomain::kTrials}) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      EXPECT_TRUE(ids.insert(substream_id(domain, i)).second);
    }
  }
}

TEST(RandomStream, UniformOpenAvoidsEndpoints) {
  RandomStream s(1, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = s.uniform_open();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomStream, UniformPassesKs) {
  RandomStream s(2, 0);
  std::vector<double> u(20000);
  for (auto& v : u) v = s.uniform();
  const auto ks = stats::ks_one_sample(u, [](double t) {
    return std::clamp(t, 0.0, 1.0);
  });
  EXPECT_GT(ks.p_value, 0.01);
}

TEST(RandomStream, ExponentialPassesKs) {
  RandomStream s(3, 0);
  std::vector<double> e(20000);
  for (auto& v : e) v = s.exponential();
  const auto ks = stats::ks_one_sample(e, [](double t) {
    return t <= 0.0 ? 0.0 : 1.0 - std::exp(-t);
  });
  EXPECT_GT(ks.p_value, 0.01);
}

TEST(RandomStream, NormalPassesKs) {
  RandomStream s(4, 0);
  std::vector<double> z(20000);
  for (auto& v : z) v = s.normal();
  const auto ks = stats::ks_one_sample(z, [](double t) {
    return 0.5 * std::erfc(-t / std::sqrt(2.0));
  });
  EXPECT_GT(ks.p_value, 0.01);
}

}  // namespace
}  // namespace hullvol
