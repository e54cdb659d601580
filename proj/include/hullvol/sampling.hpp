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

#ifndef HULLVOL_SAMPLING_HPP_
#define HULLVOL_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hullvol/random_stream.hpp"

namespace hullvol {

using Point = std::vector<double>;

// A point of the standard simplex {x >= 0, x_1 + ... + x_d = 1}.
struct SimplexPoint {
  std::vector<double> coords;

  std::size_t dimension() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
};

inline constexpr double kSimplexSumTolerance = 1e-12;

// True when every coordinate is >= 0 and the coordinates sum to 1 within tol.
bool on_standard_simplex(std::span<const double> x,
                         double tol = kSimplexSumTolerance);

namespace geometry {
struct PolytopeBody;
}

enum class BodyKind {
  kStandardSimplex,
  kOrthogonalSimplex,
  kHypercube,
  kBall,
  kSimplicialPolytope,
};

std::string_view body_kind_name(BodyKind kind);
BodyKind parse_body_kind(std::string_view name);

// The convex body points are drawn from. Points of a StandardSimplex body
// have d coordinates summing to 1; all other kinds are full-dimensional in
// d-space.
class BodySpec {
 public:
  static BodySpec standard_simplex(std::size_t d);
  static BodySpec orthogonal_simplex(std::size_t d);
  static BodySpec hypercube(std::size_t d);
  static BodySpec ball(std::size_t d);
  static BodySpec polytope(std::shared_ptr<const geometry::PolytopeBody> body);
  static BodySpec of_kind(BodyKind kind, std::size_t d);

  BodyKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  const geometry::PolytopeBody* polytope_body() const { return polytope_.get(); }
  std::string name() const { return std::string(body_kind_name(kind_)); }

 private:
  BodySpec(BodyKind kind, std::size_t d,
           std::shared_ptr<const geometry::PolytopeBody> polytope);

  BodyKind kind_;
  std::size_t dimension_;
  std::shared_ptr<const geometry::PolytopeBody> polytope_;
};

namespace sampling {

// Deterministic kernels. Cap indices are 0-based.

// q_j = E_j / sum(E).
SimplexPoint simplex_from_exponentials(std::span<const double> exponentials);

// Closed forms mapping d mean-1 exponentials to a point of the cap
// {x in simplex : x_cap >= 1 - alpha}.
enum class CapKernel {
  // p = (1 - alpha) e_cap + alpha E / sum(E): uniform on the cap.
  kUniform,
  // p_j = alpha E_j / D for j != cap and p_cap = (1 - alpha) + alpha^2
  // E_cap / D, with D = sum_{k != cap} E_k + alpha E_cap. Lands in the cap
  // but is not uniform there: it over-weights points near the cap vertex.
  kWeightedDenominator,
};

// Accepts alpha in (0, 1); sample_cap restricts to (0, 1/2).
SimplexPoint cap_from_exponentials(std::size_t cap, double alpha,
                                   std::span<const double> exponentials,
                                   CapKernel kernel = CapKernel::kUniform);

// Order-statistics vector from d mean-1 exponentials g_1..g_d, where g_j plays
// the role of j*E(j): entry i is (g_d/d + ... + g_{d-i}/(d-i)) / sum(g).
std::vector<double> order_statistics_from_exponentials(
    std::span<const double> mean_one);

// Random samplers.

SimplexPoint sample_standard_simplex(std::size_t d, RandomStream& stream);

// Direct cap sampler (uniform kernel). Requires 0 < alpha < 1/2 so that
// caps are disjoint.
SimplexPoint sample_cap(std::size_t d, std::size_t cap, double alpha,
                        RandomStream& stream);

// Rejection oracle for the cap law: draws uniform simplex points until one
// falls in the cap. Throws AttemptsExhausted after max_attempts draws.
// Expected attempts are alpha^-(d-1).
SimplexPoint sample_cap_rejection(std::size_t d, std::size_t cap, double alpha,
                                  std::uint64_t max_attempts,
                                  RandomStream& stream,
                                  std::uint64_t* attempts_used = nullptr);

// Sorted coordinates of a uniform simplex point, generated directly.
std::vector<double> sample_order_statistics(std::size_t d,
                                            RandomStream& stream);

Point sample_body(const BodySpec& body, RandomStream& stream);

}  // namespace sampling
}  // namespace hullvol

#endif  // HULLVOL_SAMPLING_HPP_
