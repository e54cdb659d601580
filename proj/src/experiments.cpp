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
#include <chrono>
#include <cmath>
#include <string>

#include "hullvol/errors.hpp"
#include "hullvol/parallel.hpp"
#include "hullvol/typical_set.hpp"

namespace hullvol::experiments {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate_coverage_config(const CoverageConfig& c, std::uint64_t n_max) {
  if (c.n == 0 && n_max == 0) throw InvalidArgument("N must be >= 1");
  if (c.test_points == 0) throw InvalidArgument("test_points must be >= 1");
  if (c.hulls == 0 || c.hulls > c.test_points) {
    throw InvalidArgument("hulls must lie in [1, test_points]");
  }
  if (n_max > kMaxHullPoints) {
    throw InvalidArgument("hull size " + std::to_string(n_max) +
                          " exceeds the cap of " +
                          std::to_string(kMaxHullPoints) + " points");
  }
}

std::vector<Point> draw_hull(const BodySpec& body, std::uint64_t n,
                             std::uint64_t seed, std::uint64_t hull) {
  RandomStream stream = make_stream(seed, StreamDomain::kHullPoints, hull);
  std::vector<Point> points;
  points.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    points.push_back(sampling::sample_body(body, stream));
  }
  return points;
}

Point draw_test_point(const BodySpec& body, std::uint64_t seed,
                      std::uint64_t test) {
  RandomStream stream = make_stream(seed, StreamDomain::kTestPoints, test);
  return sampling::sample_body(body, stream);
}

std::uint64_t block_begin(std::uint64_t h, std::uint64_t tests,
                          std::uint64_t hulls) {
  return h * tests / hulls;
}

// Runs per_test(hull_points, test_index) over all tests, hull by hull, and
// spreads work over workers either across hulls or across the tests of one
// hull. Results depend only on indices, never on the schedule.
template <class PerTest>
void for_each_test(const BodySpec& body, std::uint64_t n,
                   const CoverageConfig& c, PerTest&& per_test) {
  const std::uint64_t hulls = c.hulls;
  const std::uint64_t tests = c.test_points;
  if (hulls >= c.workers || c.workers <= 1) {
    parallel_for(hulls, c.workers, [&](std::size_t h) {
      const auto points = draw_hull(body, n, c.seed, h);
      const auto end = block_begin(h + 1, tests, hulls);
      for (auto t = block_begin(h, tests, hulls); t < end; ++t) {
        per_test(points, t);
      }
    });
    return;
  }
  for (std::uint64_t h = 0; h < hulls; ++h) {
    const auto points = draw_hull(body, n, c.seed, h);
    const auto begin = block_begin(h, tests, hulls);
    const auto end = block_begin(h + 1, tests, hulls);
    parallel_for(end - begin, c.workers,
                 [&](std::size_t k) { per_test(points, begin + k); });
  }
}

CoverageEstimate summarize(const BodySpec& body, std::uint64_t n,
                           const CoverageConfig& c, std::uint64_t hits,
                           std::uint64_t indeterminate) {
  CoverageEstimate est;
  est.body = body.name();
  est.d = body.dimension();
  est.n = n;
  est.test_points = c.test_points;
  est.hits = hits;
  est.indeterminate = indeterminate;
  est.hulls = c.hulls;
  est.seed = c.seed;
  est.fraction =
      static_cast<double>(hits) / static_cast<double>(c.test_points);
  const auto ci = stats::wilson_interval(hits, c.test_points);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  return est;
}

void check_indeterminate(const CoverageEstimate& est,
                         const CoverageConfig& config) {
  if (config.fail_on_indeterminate && indeterminate_exceeded(est)) {
    throw NonConvergence("membership LP was indeterminate on " +
                         std::to_string(est.indeterminate) + " of " +
                         std::to_string(est.test_points) + " test points");
  }
}

}  // namespace

bool indeterminate_exceeded(const CoverageEstimate& estimate) {
  return static_cast<double>(estimate.indeterminate) >
         kMaxIndeterminateShare * static_cast<double>(estimate.test_points);
}

CoverageEstimate estimate_coverage(const BodySpec& body,
                                   const CoverageConfig& config,
                                   std::vector<char>* decisions) {
  validate_coverage_config(config, config.n);
  if (config.n == 0) throw InvalidArgument("N must be >= 1");
  const auto start = Clock::now();
  std::vector<char> inside(config.test_points, 0);
  std::vector<char> indeterminate(config.test_points, 0);
  for_each_test(body, config.n, config,
                [&](const std::vector<Point>& points, std::uint64_t t) {
                  const Point x = draw_test_point(body, config.seed, t);
                  const auto v = geometry::lp_membership(x, points, config.lp);
                  inside[t] = v.inside() ? 1 : 0;
                  indeterminate[t] =
                      v.status == geometry::MembershipStatus::kIndeterminate;
                });
  const auto hits = static_cast<std::uint64_t>(
      std::count(inside.begin(), inside.end(), 1));
  const auto indet = static_cast<std::uint64_t>(
      std::count(indeterminate.begin(), indeterminate.end(), 1));
  auto est = summarize(body, config.n, config, hits, indet);
  est.wall_time_s = seconds_since(start);
  check_indeterminate(est, config);
  if (decisions) *decisions = std::move(inside);
  return est;
}

ThresholdCurve threshold_scan(const BodySpec& body,
                              const std::vector<std::uint64_t>& grid,
                              const CoverageConfig& config,
                              double epsilon_margin) {
  if (grid.empty()) throw InvalidArgument("N grid is empty");
  if (grid.front() == 0) throw InvalidArgument("N grid entries must be >= 1");
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (grid[g] <= grid[g - 1]) {
      throw InvalidArgument("N grid must be strictly ascending");
    }
  }
  validate_coverage_config(config, grid.back());
  const auto start = Clock::now();
  const std::size_t levels = grid.size();

  // first_inside[t]: smallest grid index whose hull contains test t
  // (levels if none). indeterminate flags are per (test, level).
  std::vector<std::uint32_t> first_inside(config.test_points, 0);
  std::vector<std::vector<char>> indeterminate(
      levels, std::vector<char>(config.test_points, 0));

  for_each_test(
      body, grid.back(), config,
      [&](const std::vector<Point>& points, std::uint64_t t) {
        const Point x = draw_test_point(body, config.seed, t);
        // Membership is monotone along nested prefixes, so bisect.
        std::size_t lo = 0, hi = levels;
        while (lo < hi) {
          const std::size_t mid = (lo + hi) / 2;
          const std::span<const Point> prefix(points.data(), grid[mid]);
          const auto v = geometry::lp_membership(x, prefix, config.lp);
          if (v.status == geometry::MembershipStatus::kIndeterminate) {
            indeterminate[mid][t] = 1;
          }
          if (v.inside()) {
            hi = mid;
          } else {
            lo = mid + 1;
          }
        }
        first_inside[t] = static_cast<std::uint32_t>(lo);
      });

  ThresholdCurve curve;
  curve.grid = grid;
  curve.reference =
      bounds::threshold_predictions(body.dimension(), epsilon_margin);
  const double elapsed = seconds_since(start);
  for (std::size_t g = 0; g < levels; ++g) {
    const auto hits = static_cast<std::uint64_t>(
        std::count_if(first_inside.begin(), first_inside.end(),
                      [g](std::uint32_t f) { return f <= g; }));
    const auto indet = static_cast<std::uint64_t>(
        std::count(indeterminate[g].begin(), indeterminate[g].end(), 1));
    auto est = summarize(body, grid[g], config, hits, indet);
    est.wall_time_s = elapsed;
    check_indeterminate(est, config);
    curve.estimates.push_back(est);
  }
  return curve;
}

CapCollectionReport cap_collection(std::size_t d, double alpha,
                                   std::uint64_t budget, std::uint64_t seed,
                                   std::uint64_t run) {
  if (d == 0) throw InvalidArgument("dimension must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1]");
  }
  if (budget == 0) throw InvalidArgument("budget must be >= 1");
  CapCollectionReport report;
  report.alpha = alpha;
  report.d = d;
  report.waiting_times.assign(d, std::nullopt);
  RandomStream stream = make_stream(seed, StreamDomain::kGeneral, run);
  std::size_t missing = d;
  for (std::uint64_t t = 1; t <= budget && missing > 0; ++t) {
    const auto q = sampling::sample_standard_simplex(d, stream);
    report.draws = t;
    // For alpha > 1/2 caps overlap and one draw may hit several.
    for (std::size_t cap = 0; cap < d; ++cap) {
      if (q.coords[cap] >= 1.0 - alpha && !report.waiting_times[cap]) {
        report.waiting_times[cap] = t;
        --missing;
      }
    }
  }
  if (missing == 0) {
    std::uint64_t last = 0;
    for (const auto& w : report.waiting_times) last = std::max(last, *w);
    report.all_collected_at = last;
  }
  return report;
}

namespace {

struct TrialOutcome {
  bool completed = false;
  bool inside = false;
  bool all_b = false;
  bool certified = false;
  bool lp_indeterminate = false;
  bool inside_unconditioned = false;
  std::uint64_t abc_violations = 0;
  std::uint64_t cap_attempts = 0;
};

TrialOutcome run_containment_trial(const ContainmentConfig& c,
                                   const typical::TypicalSetParams& params,
                                   std::uint64_t trial) {
  TrialOutcome out;
  RandomStream stream = make_stream(c.seed, StreamDomain::kTrials, trial);
  const std::size_t d = c.d;

  std::optional<SimplexPoint> x;
  for (std::uint64_t a = 0; a < c.max_typical_attempts; ++a) {
    auto candidate = sampling::sample_standard_simplex(d, stream);
    if (typical::in_typical_set(candidate.coords, params)) {
      x = std::move(candidate);
      break;
    }
  }
  if (!x) return out;

  std::vector<SimplexPoint> rows;
  rows.reserve(d);
  bool all_b = true;
  std::vector<double> e(d);
  for (std::size_t cap = 0; cap < d; ++cap) {
    bool accepted = false;
    for (std::uint64_t a = 0; a < c.max_cap_attempts; ++a) {
      for (auto& v : e) v = stream.exponential();
      ++out.cap_attempts;
      const auto ev = typical::goodpi_events(x->coords, cap, e, c.alpha, params);
      if (ev.A && ev.B && !ev.C) ++out.abc_violations;
      if (ev.A) {
        all_b = all_b && ev.B;
        rows.push_back(sampling::cap_from_exponentials(cap, c.alpha, e));
        accepted = true;
        break;
      }
    }
    if (!accepted) return out;
  }

  const geometry::CapMatrix p = geometry::CapMatrix::from_points(rows, c.alpha);
  std::vector<Point> cloud;
  cloud.reserve(d);
  for (auto& r : rows) cloud.push_back(r.coords);
  const auto lp = geometry::lp_membership(x->coords, cloud);
  const auto cert = geometry::neumann_certify(*x, p);

  std::vector<Point> plain;
  plain.reserve(d);
  for (std::size_t cap = 0; cap < d; ++cap) {
    plain.push_back(sampling::sample_cap(d, cap, c.alpha, stream).coords);
  }
  const auto lp_plain = geometry::lp_membership(x->coords, plain);

  out.completed = true;
  out.inside = lp.inside();
  out.lp_indeterminate =
      lp.status == geometry::MembershipStatus::kIndeterminate ||
      lp_plain.status == geometry::MembershipStatus::kIndeterminate;
  out.certified = cert.status == geometry::MembershipStatus::kCertifiedInside;
  out.all_b = all_b;
  out.inside_unconditioned = lp_plain.inside();
  return out;
}

}  // namespace

ContainmentReport containment_experiment(const ContainmentConfig& c) {
  if (c.d < 2) throw InvalidArgument("containment needs d >= 2");
  if (c.trials == 0) throw InvalidArgument("trials must be >= 1");
  if (!(c.gamma <= 1.0 / 6.0)) {
    throw InvalidArgument("hypothesis violated: gamma <= 1/6");
  }
  if (!(2.0 * c.epsilon * c.gamma <= 5.0 * c.alpha)) {
    throw InvalidArgument("hypothesis violated: 2 eps gamma <= 5 alpha");
  }
  if (!(c.alpha > 0.0 && c.alpha < 0.5)) {
    throw InvalidArgument("alpha must lie in (0, 1/2)");
  }
  const typical::TypicalSetParams params(c.d, c.epsilon, c.gamma);

  std::vector<TrialOutcome> outcomes(c.trials);
  parallel_for(c.trials, c.workers, [&](std::size_t t) {
    outcomes[t] = run_containment_trial(c, params, t);
  });

  ContainmentReport r;
  r.config = c;
  std::uint64_t attempts = 0;
  for (const auto& o : outcomes) {
    r.events_abc_violations += o.abc_violations;
    if (!o.completed) {
      ++r.discarded;
      continue;
    }
    ++r.completed;
    attempts += o.cap_attempts;
    r.inside_given_a += o.inside;
    r.inside_unconditioned += o.inside_unconditioned;
    r.certified += o.certified;
    r.certified_but_outside += (o.certified && !o.inside);
    r.lp_indeterminate += o.lp_indeterminate;
    if (o.all_b) {
      ++r.trials_with_b;
      r.inside_given_ab += o.inside;
    }
  }
  auto share = [](std::uint64_t k, std::uint64_t n) {
    return n ? static_cast<double>(k) / static_cast<double>(n) : 0.0;
  };
  r.p_given_a = share(r.inside_given_a, r.completed);
  r.ci_given_a = stats::wilson_interval(r.inside_given_a, r.completed);
  r.p_given_ab = share(r.inside_given_ab, r.trials_with_b);
  r.ci_given_ab = stats::wilson_interval(r.inside_given_ab, r.trials_with_b);
  r.p_unconditioned = share(r.inside_unconditioned, r.completed);
  r.ci_unconditioned =
      stats::wilson_interval(r.inside_unconditioned, r.completed);
  r.delta = bounds::delta_d(c.alpha, c.gamma, c.d);
  r.mean_cap_attempts =
      r.completed ? static_cast<double>(attempts) /
                        static_cast<double>(r.completed * c.d)
                  : 0.0;
  return r;
}

}  // namespace hullvol::experiments
