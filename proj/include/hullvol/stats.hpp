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

#ifndef HULLVOL_STATS_HPP_
#define HULLVOL_STATS_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hullvol::stats {

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

// Wilson score interval for a binomial proportion; z = 1.96 gives 95%.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_q(double lambda);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// One-sample test of `samples` against a continuous CDF.
KsResult ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& cdf);

// Two-sample test; p-value from the asymptotic distribution with the
// Stephens small-sample correction.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct MeanVar {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  std::size_t count = 0;
  double standard_error() const;
};

MeanVar mean_variance(std::span<const double> values);

}  // namespace hullvol::stats

#endif  // HULLVOL_STATS_HPP_
