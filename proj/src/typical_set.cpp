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
#include <limits>
#include <numeric>
#include <string>

#include "hullvol/errors.hpp"

namespace hullvol::typical {

RankMaps rank_maps(std::span<const double> x) {
  RankMaps maps;
  maps.index.resize(x.size());
  std::iota(maps.index.begin(), maps.index.end(), std::size_t{0});
  std::stable_sort(maps.index.begin(), maps.index.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  maps.rank.resize(x.size());
  for (std::size_t r = 0; r < x.size(); ++r) maps.rank[maps.index[r]] = r;
  return maps;
}

TypicalSetParams::TypicalSetParams(std::size_t d, double epsilon, double gamma)
    : dimension_(d), epsilon_(epsilon), gamma_(gamma) {
  if (d == 0) throw InvalidArgument("dimension must be >= 1");
  if (!(epsilon > 0.0 && epsilon <= 0.125)) {
    throw InvalidArgument("epsilon must lie in (0, 1/8]");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgument("gamma must lie in (0, 1)");
  }
  const double dd = static_cast<double>(d);
  small_ranks_ = static_cast<std::size_t>(std::floor(gamma * dd));
  sqrt_cutoff_ = static_cast<std::size_t>(std::floor(std::sqrt(dd)));
  profile_.resize(d);
  const double tiny = std::exp(-std::sqrt(dd));
  for (std::size_t i = 0; i < d; ++i) {
    profile_[i] = (i + 1 <= sqrt_cutoff_) ? tiny : epsilon;
  }
}

double TypicalSetParams::small_threshold(std::size_t rank_one_based) const {
  const double dd = static_cast<double>(dimension_);
  return profile_[rank_one_based - 1] * static_cast<double>(rank_one_based) /
         (dd * dd);
}

double TypicalSetParams::bulk_threshold() const {
  return gamma_ / (2.0 * static_cast<double>(dimension_));
}

bool in_typical_set(std::span<const double> x, const TypicalSetParams& params) {
  const std::size_t d = params.dimension();
  if (x.size() != d) throw InvalidArgument("point dimension mismatch");
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = params.small_ranks();
  for (std::size_t r = 1; r <= k; ++r) {
    if (sorted[r - 1] < params.small_threshold(r)) return false;
  }
  // Sorted order: checking the first bulk rank covers all later ones.
  if (k < d && sorted[k] < params.bulk_threshold()) return false;
  return true;
}

TypicalVolumeEstimate estimate_typical_volume(const TypicalSetParams& params,
                                              std::uint64_t trials,
                                              RandomStream& stream) {
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  TypicalVolumeEstimate est;
  est.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto x = sampling::sample_standard_simplex(params.dimension(), stream);
    if (in_typical_set(x.coords, params)) ++est.hits;
  }
  est.fraction = static_cast<double>(est.hits) / static_cast<double>(trials);
  est.ci = stats::wilson_interval(est.hits, trials);
  return est;
}

GoodPiEventReport goodpi_events(std::span<const double> x, std::size_t cap,
                                std::span<const double> exponentials,
                                double alpha, const TypicalSetParams& params,
                                sampling::CapKernel kernel) {
  const std::size_t d = params.dimension();
  if (x.size() != d || exponentials.size() != d) {
    throw InvalidArgument("dimension mismatch");
  }
  if (cap >= d) throw InvalidArgument("cap index out of range");
  if (!(params.gamma() <= 1.0 / 6.0)) {
    throw InvalidArgument("hypothesis violated: gamma <= 1/6");
  }
  if (!(2.0 * params.epsilon() * params.gamma() <= 5.0 * alpha)) {
    throw InvalidArgument("hypothesis violated: 2 eps gamma <= 5 alpha");
  }
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw InvalidArgument("hypothesis violated: 0 < alpha < 1/2");
  }
  if (!in_typical_set(x, params)) {
    throw InvalidArgument("hypothesis violated: x in the typical set");
  }

  const double dd = static_cast<double>(d);
  const RankMaps maps = rank_maps(x);
  const std::size_t k = params.small_ranks();
  const SimplexPoint p =
      sampling::cap_from_exponentials(cap, alpha, exponentials, kernel);

  GoodPiEventReport report;
  report.a_thresholds.assign(k, std::numeric_limits<double>::quiet_NaN());
  report.c_thresholds.assign(k, std::numeric_limits<double>::quiet_NaN());
  report.A = true;
  report.C = true;
  for (std::size_t j = 1; j <= k; ++j) {
    const std::size_t coord = maps.index[j - 1];
    if (coord == cap) continue;
    const double eps_j = params.profile()[j - 1];
    const double a_bound = 2.0 * eps_j * static_cast<double>(j) / (5.0 * dd);
    const double c_bound = eps_j * static_cast<double>(j) / (2.0 * dd * dd);
    report.a_thresholds[j - 1] = a_bound;
    report.c_thresholds[j - 1] = c_bound;
    if (!(alpha * exponentials[coord] <= a_bound)) report.A = false;
    if (!(p.coords[coord] <= c_bound)) report.C = false;
  }
  double sum = 0.0;
  for (std::size_t c = 0; c < d; ++c) {
    if (c != cap && maps.rank[c] >= k) sum += exponentials[c];
  }
  report.b_sum = sum;
  report.b_threshold = 4.0 * dd / 5.0;
  report.B = sum >= report.b_threshold;
  return report;
}

double event_a_lower_bound(double alpha, const TypicalSetParams& params) {
  const double dd = static_cast<double>(params.dimension());
  const double g = params.gamma();
  const double base = params.epsilon() * g / (5.0 * std::exp(1.0) * alpha);
  return std::exp(-std::log(dd) + g * dd * std::log(base) - dd);
}

}  // namespace hullvol::typical
