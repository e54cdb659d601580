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

#ifndef HULLVOL_TYPICAL_SET_HPP_
#define HULLVOL_TYPICAL_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hullvol/random_stream.hpp"
#include "hullvol/sampling.hpp"
#include "hullvol/stats.hpp"

namespace hullvol::typical {

// rank[i] is the 0-based rank of coordinate i (0 = smallest); index[r] is the
// coordinate holding rank r. Ties go to the lower coordinate index.
struct RankMaps {
  std::vector<std::size_t> rank;
  std::vector<std::size_t> index;
};

RankMaps rank_maps(std::span<const double> x);

// Constants of the typical set. The per-rank profile is
//   eps_i = exp(-sqrt(d)) for ranks i <= floor(sqrt(d)),  eps otherwise
// (1-based ranks), stored 0-based in `profile`.
class TypicalSetParams {
 public:
  static constexpr double kDefaultEpsilon = 1.0 / 8.0;
  static constexpr double kDefaultGamma = 1.0 / 6.0;
  static constexpr double kDefaultAlpha = 3.0 / 100.0;

  TypicalSetParams(std::size_t d, double epsilon = kDefaultEpsilon,
                   double gamma = kDefaultGamma);

  std::size_t dimension() const { return dimension_; }
  double epsilon() const { return epsilon_; }
  double gamma() const { return gamma_; }
  const std::vector<double>& profile() const { return profile_; }
  // floor(gamma * d): ranks 1..small_ranks() carry the per-rank thresholds.
  std::size_t small_ranks() const { return small_ranks_; }
  // floor(sqrt(d)): ranks up to here use exp(-sqrt(d)).
  std::size_t sqrt_cutoff() const { return sqrt_cutoff_; }
  // Per-rank lower threshold eps_i * i / d^2 for 1-based rank i <= small_ranks().
  double small_threshold(std::size_t rank_one_based) const;
  // gamma / (2 d), the floor for all larger ranks.
  double bulk_threshold() const;

 private:
  std::size_t dimension_;
  double epsilon_;
  double gamma_;
  std::size_t small_ranks_;
  std::size_t sqrt_cutoff_;
  std::vector<double> profile_;
};

bool in_typical_set(std::span<const double> x, const TypicalSetParams& params);

struct TypicalVolumeEstimate {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double fraction = 0.0;
  stats::Interval ci;
};

// Monte Carlo share of uniform simplex points that are typical.
TypicalVolumeEstimate estimate_typical_volume(const TypicalSetParams& params,
                                              std::uint64_t trials,
                                              RandomStream& stream);

struct GoodPiEventReport {
  bool A = false;
  bool B = false;
  bool C = false;
  // Per constrained rank j (1-based j = k+1): the bound on alpha*E used by A
  // and the bound on the cap coordinate used by C. Entries for the rank held
  // by the cap coordinate itself are NaN (unconstrained).
  std::vector<double> a_thresholds;
  std::vector<double> c_thresholds;
  double b_threshold = 0.0;
  double b_sum = 0.0;
};

// Evaluates events A, B and C for the cap point built from `exponentials`
// (d mean-1 draws) in cap `cap` (0-based). Requires x typical, gamma <= 1/6
// and 2 eps gamma <= 5 alpha; violations throw InvalidArgument naming the
// failed inequality.
// The cap point used by C is built with `kernel`; A and B depend only on the
// exponentials.
GoodPiEventReport goodpi_events(
    std::span<const double> x, std::size_t cap,
    std::span<const double> exponentials, double alpha,
    const TypicalSetParams& params,
    sampling::CapKernel kernel = sampling::CapKernel::kUniform);

// Lower bound (1/d) (eps gamma / (5 e alpha))^(gamma d) e^-d on P(A).
double event_a_lower_bound(double alpha, const TypicalSetParams& params);

}  // namespace hullvol::typical

#endif  // HULLVOL_TYPICAL_SET_HPP_
