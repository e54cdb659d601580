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

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "hullvol/errors.hpp"
#include "hullvol/geometry.hpp"

namespace hullvol {

bool on_standard_simplex(std::span<const double> x, double tol) {
  double sum = 0.0;
  for (double v : x) {
    if (!(v >= 0.0)) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

std::string_view body_kind_name(BodyKind kind) {
  switch (kind) {
    case BodyKind::kStandardSimplex:
      return "simplex";
    case BodyKind::kOrthogonalSimplex:
      return "orthogonal_simplex";
    case BodyKind::kHypercube:
      return "hypercube";
    case BodyKind::kBall:
      return "ball";
    case BodyKind::kSimplicialPolytope:
      return "polytope";
  }
  return "unknown";
}

BodyKind parse_body_kind(std::string_view name) {
  if (name == "simplex" || name == "standard_simplex") {
    return BodyKind::kStandardSimplex;
  }
  if (name == "orthogonal_simplex" || name == "orthogonal") {
    return BodyKind::kOrthogonalSimplex;
  }
  if (name == "hypercube" || name == "cube") return BodyKind::kHypercube;
  if (name == "ball") return BodyKind::kBall;
  if (name == "polytope") return BodyKind::kSimplicialPolytope;
  throw InvalidArgument("unknown body kind '" + std::string(name) + "'");
}

BodySpec::BodySpec(BodyKind kind, std::size_t d,
                   std::shared_ptr<const geometry::PolytopeBody> polytope)
    : kind_(kind), dimension_(d), polytope_(std::move(polytope)) {
  if (d == 0) throw InvalidArgument("body dimension must be >= 1");
  if ((kind == BodyKind::kSimplicialPolytope) != (polytope_ != nullptr)) {
    throw InvalidArgument(
        "polytope payload must be present exactly for polytope bodies");
  }
}

BodySpec BodySpec::standard_simplex(std::size_t d) {
  return BodySpec(BodyKind::kStandardSimplex, d, nullptr);
}
BodySpec BodySpec::orthogonal_simplex(std::size_t d) {
  return BodySpec(BodyKind::kOrthogonalSimplex, d, nullptr);
}
BodySpec BodySpec::hypercube(std::size_t d) {
  return BodySpec(BodyKind::kHypercube, d, nullptr);
}
BodySpec BodySpec::ball(std::size_t d) {
  return BodySpec(BodyKind::kBall, d, nullptr);
}
BodySpec BodySpec::polytope(
    std::shared_ptr<const geometry::PolytopeBody> body) {
  if (!body) throw InvalidArgument("polytope body is null");
  const std::size_t d = body->polytope.dimension;
  return BodySpec(BodyKind::kSimplicialPolytope, d, std::move(body));
}
BodySpec BodySpec::of_kind(BodyKind kind, std::size_t d) {
  if (kind == BodyKind::kSimplicialPolytope) {
    throw InvalidArgument("polytope bodies need a polytope payload");
  }
  return BodySpec(kind, d, nullptr);
}

namespace sampling {
namespace {

void require_dimension(std::size_t d) {
  if (d == 0) throw InvalidArgument("dimension must be >= 1");
}

void require_cap(std::size_t d, std::size_t cap, double alpha) {
  require_dimension(d);
  if (cap >= d) {
    throw InvalidArgument("cap index " + std::to_string(cap) +
                          " out of range for dimension " + std::to_string(d));
  }
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw InvalidArgument("cap alpha must lie in (0, 1/2), got " +
                          std::to_string(alpha));
  }
}

std::vector<double> draw_exponentials(std::size_t n, RandomStream& stream) {
  std::vector<double> e(n);
  for (auto& v : e) v = stream.exponential();
  return e;
}

}  // namespace

SimplexPoint simplex_from_exponentials(std::span<const double> exponentials) {
  require_dimension(exponentials.size());
  const double total =
      std::accumulate(exponentials.begin(), exponentials.end(), 0.0);
  if (!(total > 0.0)) throw InvalidArgument("exponential draws sum to zero");
  SimplexPoint q{std::vector<double>(exponentials.size())};
  for (std::size_t j = 0; j < exponentials.size(); ++j) {
    q.coords[j] = exponentials[j] / total;
  }
  return q;
}

SimplexPoint cap_from_exponentials(std::size_t cap, double alpha,
                                   std::span<const double> exponentials,
                                   CapKernel kernel) {
  const std::size_t d = exponentials.size();
  require_dimension(d);
  if (cap >= d) throw InvalidArgument("cap index out of range");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("cap alpha must lie in (0, 1)");
  }
  double off_sum = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    if (k != cap) off_sum += exponentials[k];
  }
  const double denom = kernel == CapKernel::kUniform
                           ? off_sum + exponentials[cap]
                           : off_sum + alpha * exponentials[cap];
  if (!(denom > 0.0)) throw InvalidArgument("exponential draws sum to zero");
  const double cap_weight = kernel == CapKernel::kUniform ? alpha : alpha * alpha;
  SimplexPoint p{std::vector<double>(d)};
  for (std::size_t j = 0; j < d; ++j) {
    p.coords[j] = (j == cap)
                      ? (1.0 - alpha) + cap_weight * exponentials[j] / denom
                      : alpha * exponentials[j] / denom;
  }
  return p;
}

std::vector<double> order_statistics_from_exponentials(
    std::span<const double> mean_one) {
  const std::size_t d = mean_one.size();
  require_dimension(d);
  const double total = std::accumulate(mean_one.begin(), mean_one.end(), 0.0);
  if (!(total > 0.0)) throw InvalidArgument("exponential draws sum to zero");
  // mean_one[k] is (k+1) * E(k+1); the i-th smallest coordinate is the partial
  // sum of E(d), E(d-1), ..., E(d-i+1).
  std::vector<double> out(d);
  double partial = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t rate = d - i;
    partial += mean_one[rate - 1] / static_cast<double>(rate);
    out[i] = partial / total;
  }
  return out;
}

SimplexPoint sample_standard_simplex(std::size_t d, RandomStream& stream) {
  require_dimension(d);
  const auto e = draw_exponentials(d, stream);
  return simplex_from_exponentials(e);
}

SimplexPoint sample_cap(std::size_t d, std::size_t cap, double alpha,
                        RandomStream& stream) {
  require_cap(d, cap, alpha);
  const auto e = draw_exponentials(d, stream);
  return cap_from_exponentials(cap, alpha, e);
}

SimplexPoint sample_cap_rejection(std::size_t d, std::size_t cap, double alpha,
                                  std::uint64_t max_attempts,
                                  RandomStream& stream,
                                  std::uint64_t* attempts_used) {
  require_dimension(d);
  if (cap >= d) throw InvalidArgument("cap index out of range");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("rejection cap alpha must lie in (0, 1)");
  }
  if (max_attempts == 0) throw InvalidArgument("max_attempts must be >= 1");
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    SimplexPoint q = sample_standard_simplex(d, stream);
    if (q.coords[cap] >= 1.0 - alpha) {
      if (attempts_used) *attempts_used = attempt;
      return q;
    }
  }
  if (attempts_used) *attempts_used = max_attempts;
  throw AttemptsExhausted("cap rejection sampler exhausted " +
                              std::to_string(max_attempts) + " attempts",
                          max_attempts);
}

std::vector<double> sample_order_statistics(std::size_t d,
                                            RandomStream& stream) {
  require_dimension(d);
  const auto g = draw_exponentials(d, stream);
  return order_statistics_from_exponentials(g);
}

Point sample_body(const BodySpec& body, RandomStream& stream) {
  const std::size_t d = body.dimension();
  switch (body.kind()) {
    case BodyKind::kStandardSimplex:
      return sample_standard_simplex(d, stream).coords;
    case BodyKind::kOrthogonalSimplex: {
      // The first d of d+1 normalised exponentials.
      auto e = draw_exponentials(d + 1, stream);
      const double total = std::accumulate(e.begin(), e.end(), 0.0);
      e.pop_back();
      for (auto& v : e) v /= total;
      return e;
    }
    case BodyKind::kHypercube: {
      Point x(d);
      for (auto& v : x) v = stream.uniform();
      return x;
    }
    case BodyKind::kBall: {
      Point x(d);
      double norm2 = 0.0;
      for (auto& v : x) {
        v = stream.normal();
        norm2 += v * v;
      }
      const double radius =
          std::pow(stream.uniform(), 1.0 / static_cast<double>(d));
      const double scale = radius / std::sqrt(norm2);
      for (auto& v : x) v *= scale;
      return x;
    }
    case BodyKind::kSimplicialPolytope:
      return geometry::sample_polytope(body.polytope_body()->triangulation,
                                       stream);
  }
  throw InvalidArgument("unsupported body kind");
}

}  // namespace sampling
}  // namespace hullvol
