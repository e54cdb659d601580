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

#include "hullvol/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "hullvol/bounds.hpp"
#include "hullvol/experiments.hpp"
#include "hullvol/geometry.hpp"
#include "hullvol/sampling.hpp"
#include "hullvol/stats.hpp"
#include "hullvol/typical_set.hpp"

namespace hullvol::verify {
namespace {

// Each check returns an empty string on success, else what went wrong.

std::string simplex_support(std::uint64_t seed, std::size_t) {
  RandomStream s = make_stream(seed, StreamDomain::kGeneral, 1);
  for (std::size_t d : {1, 2, 7, 30}) {
    for (int k = 0; k < 500; ++k) {
      const auto q = sampling::sample_standard_simplex(d, s);
      if (!on_standard_simplex(q.coords, 1e-12)) {
        return "uniform point off the simplex at d=" + std::to_string(d);
      }
    }
  }
  return {};
}

std::string cap_support(std::uint64_t seed, std::size_t) {
  RandomStream s = make_stream(seed, StreamDomain::kGeneral, 2);
  for (double alpha : {0.03, 0.3, 0.49}) {
    for (std::size_t d : {2, 5, 12}) {
      for (int k = 0; k < 200; ++k) {
        const std::size_t cap = static_cast<std::size_t>(k) % d;
        const auto p = sampling::sample_cap(d, cap, alpha, s);
        if (!on_standard_simplex(p.coords, 1e-12) ||
            p.coords[cap] < 1.0 - alpha - 1e-15) {
          return "cap point outside its cap";
        }
      }
    }
  }
  return {};
}

std::string order_statistics_sorted(std::uint64_t seed, std::size_t) {
  RandomStream s = make_stream(seed, StreamDomain::kGeneral, 3);
  for (int k = 0; k < 500; ++k) {
    const auto o = sampling::sample_order_statistics(9, s);
    if (!std::is_sorted(o.begin(), o.end()) ||
        !on_standard_simplex(o, 1e-12)) {
      return "order statistics not sorted or off the simplex";
    }
  }
  return {};
}

std::string worker_reproducibility(std::uint64_t seed, std::size_t workers) {
  const auto body = BodySpec::standard_simplex(4);
  experiments::CoverageConfig c;
  c.n = 40;
  c.test_points = 300;
  c.hulls = 3;
  c.seed = seed;
  c.workers = 1;
  std::vector<char> a, b;
  const auto e1 = experiments::estimate_coverage(body, c, &a);
  c.workers = std::max<std::size_t>(3, workers);
  const auto e2 = experiments::estimate_coverage(body, c, &b);
  if (e1.hits != e2.hits || a != b) {
    return "hit counts differ between 1 and " + std::to_string(c.workers) + " workers";
  }
  return {};
}

std::string nested_monotonicity(std::uint64_t seed, std::size_t) {
  const auto body = BodySpec::hypercube(3);
  experiments::CoverageConfig c;
  c.test_points = 400;
  c.seed = seed;
  const auto curve =
      experiments::threshold_scan(body, {4, 8, 16, 32, 64, 128}, c);
  for (std::size_t g = 1; g < curve.estimates.size(); ++g) {
    if (curve.estimates[g].hits < curve.estimates[g - 1].hits) {
      return "coverage decreased along the grid";
    }
  }
  for (const auto& e : curve.estimates) {
    if (!(e.ci_low <= e.fraction && e.fraction <= e.ci_high)) {
      return "interval does not bracket the estimate";
    }
  }
  return {};
}

std::string lp_agrees_with_barycentric(std::uint64_t seed, std::size_t) {
  RandomStream s = make_stream(seed, StreamDomain::kGeneral, 4);
  const std::size_t d = 5;
  for (int k = 0; k < 200; ++k) {
    std::vector<Point> pts;
    Eigen::MatrixXd rows(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      pts.push_back(sampling::sample_standard_simplex(d, s).coords);
      for (std::size_t j = 0; j < d; ++j) rows(i, j) = pts[i][j];
    }
    const auto x = sampling::sample_standard_simplex(d, s).coords;
    const auto lambda = geometry::barycentric(x, rows);
    const double lo = *std::min_element(lambda.begin(), lambda.end());
    if (std::abs(lo) < 1e-8) continue;  // too close to call either way
    const auto v = geometry::lp_membership(x, pts);
    if (v.status == geometry::MembershipStatus::kIndeterminate) {
      return "indeterminate LP verdict on a simplex";
    }
    if (v.inside() != (lo > 0.0)) return "LP disagrees with barycentric";
  }
  return {};
}

std::string neumann_soundness(std::uint64_t seed, std::size_t) {
  RandomStream s = make_stream(seed, StreamDomain::kGeneral, 5);
  for (std::size_t d : {5, 10}) {
    for (int k = 0; k < 150; ++k) {
      std::vector<SimplexPoint> rows;
      std::vector<Point> pts;
      for (std::size_t i = 0; i < d; ++i) {
        rows.push_back(sampling::sample_cap(d, i, 0.1, s));
        pts.push_back(rows.back().coords);
      }
      const auto p = geometry::CapMatrix::from_points(rows, 0.1);
      const auto x = sampling::sample_standard_simplex(d, s);
      const auto cert = geometry::neumann_certify(x, p);
      if (cert.status != geometry::MembershipStatus::kCertifiedInside) {
        continue;
      }
      const auto v = geometry::lp_membership(x.coords, pts);
      if (v.status == geometry::MembershipStatus::kOutside) {
        return "certified point rejected by the LP";
      }
    }
  }
  return {};
}

std::string rank_maps_inverse(std::uint64_t seed, std::size_t) {
  RandomStream s = make_stream(seed, StreamDomain::kGeneral, 6);
  for (int k = 0; k < 200; ++k) {
    const auto q = sampling::sample_standard_simplex(11, s);
    const auto m = typical::rank_maps(q.coords);
    for (std::size_t i = 0; i < q.coords.size(); ++i) {
      if (m.index[m.rank[i]] != i) return "rank maps are not inverse";
    }
    for (std::size_t r = 1; r < q.coords.size(); ++r) {
      if (q.coords[m.index[r - 1]] > q.coords[m.index[r]]) {
        return "rank order not ascending";
      }
    }
  }
  return {};
}

std::string bound_sanity(std::uint64_t, std::size_t) {
  const auto report = bounds::verify_lower_bound_integrals(0.05);
  if (std::abs(report.euler_integral - bounds::kEulerGamma) > 1e-8) {
    return "Euler integral off";
  }
  if (!(report.remainder_integral < 1.0)) return "remainder not below 1";
  for (double t : {1e-6, 0.3, 1.0, 2.0, 40.0}) {
    if (bounds::psi(t) < 0.0) return "psi negative";
  }
  const auto j = bounds::janson_bound({{1, 1, 1, 1, 1}, 0.5});
  if (!(j.bound > 0.0 && j.bound <= 1.0)) return "Janson bound out of [0, 1]";
  return {};
}

std::string polytope_volumes(std::uint64_t seed, std::size_t) {
  const auto tri3 = geometry::triangulate(geometry::cross_polytope(3));
  if (std::abs(tri3.total_volume() - 4.0 / 3.0) > 1e-10) {
    return "octahedron volume off";
  }
  const auto tri4 = geometry::triangulate(geometry::cross_polytope(4));
  if (std::abs(tri4.total_volume() - 2.0 / 3.0) > 1e-10) {
    return "4-cross-polytope volume off";
  }
  Eigen::MatrixXd a(3, 3);
  a << 2.0, 0.5, 0.0, 0.0, 1.0, -0.3, 0.1, 0.0, 1.5;
  const Eigen::VectorXd b = Eigen::Vector3d(1.0, -2.0, 0.5);
  const auto base = BodySpec::polytope(
      geometry::make_polytope_body(geometry::cross_polytope(3)));
  const auto mapped = BodySpec::polytope(geometry::make_polytope_body(
      geometry::affine_image(geometry::cross_polytope(3), a, b)));
  experiments::CoverageConfig c;
  c.n = 20;
  c.test_points = 300;
  c.seed = seed;
  std::vector<char> d1, d2;
  experiments::estimate_coverage(base, c, &d1);
  experiments::estimate_coverage(mapped, c, &d2);
  if (d1 != d2) return "affine image changed inside/outside decisions";
  return {};
}

std::string cap_waiting_times(std::uint64_t seed, std::size_t) {
  for (std::uint64_t run = 0; run < 50; ++run) {
    const auto r = experiments::cap_collection(4, 0.5, 10000, seed, run);
    std::uint64_t last = 0;
    bool all = true;
    for (const auto& w : r.waiting_times) {
      if (w && *w == 0) return "zero waiting time";
      if (w) last = std::max(last, *w);
      all = all && w.has_value();
    }
    if (all != r.all_collected_at.has_value()) {
      return "all_collected_at inconsistent";
    }
    if (all && *r.all_collected_at != last) {
      return "all_collected_at is not the max waiting time";
    }
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_property_suite(std::uint64_t seed,
                                            std::size_t workers) {
  const std::vector<std::pair<std::string, std::function<std::string(
                                               std::uint64_t, std::size_t)>>>
      checks = {
          {"simplex_support", simplex_support},
          {"cap_support", cap_support},
          {"order_statistics_sorted", order_statistics_sorted},
          {"worker_reproducibility", worker_reproducibility},
          {"nested_monotonicity", nested_monotonicity},
          {"lp_agrees_with_barycentric", lp_agrees_with_barycentric},
          {"neumann_soundness", neumann_soundness},
          {"rank_maps_inverse", rank_maps_inverse},
          {"bound_sanity", bound_sanity},
          {"polytope_volumes_and_affine_invariance", polytope_volumes},
          {"cap_waiting_times", cap_waiting_times},
      };
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = fn(seed, workers);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hullvol::verify
