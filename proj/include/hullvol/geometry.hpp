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

#ifndef HULLVOL_GEOMETRY_HPP_
#define HULLVOL_GEOMETRY_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hullvol/random_stream.hpp"
#include "hullvol/sampling.hpp"

namespace hullvol::geometry {

// Hull coefficients may dip this far below zero and still count as inside.
inline constexpr double kCoefficientTolerance = 1e-10;
// Residual allowed when reconstructing a point from hull coefficients.
inline constexpr double kReconstructionTolerance = 1e-9;

// d x d matrix whose row i is a point of the cap C_i(alpha). Rows sum to 1,
// entries are nonnegative, and P_ii >= 1 - alpha. Immutable once built.
class CapMatrix {
 public:
  CapMatrix(Eigen::MatrixXd entries, double alpha);
  static CapMatrix from_points(std::span<const SimplexPoint> rows,
                               double alpha);

  const Eigen::MatrixXd& entries() const { return entries_; }
  double alpha() const { return alpha_; }
  std::size_t dimension() const {
    return static_cast<std::size_t>(entries_.rows());
  }
  // M = D^-1 R where P = D + R splits off the diagonal.
  Eigen::MatrixXd iteration_matrix() const;

 private:
  Eigen::MatrixXd entries_;
  double alpha_;
};

enum class MembershipStatus { kCertifiedInside, kInside, kOutside, kIndeterminate };

std::string_view membership_status_name(MembershipStatus status);

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::kIndeterminate;
  // Hull weights, one per cloud point (or per CapMatrix row).
  std::optional<std::vector<double>> coefficients;
  // For kOutside from the LP: direction a and offset c with
  // a.q + c <= 0 for every cloud point q and a.x + c > 0.
  std::optional<std::vector<double>> separating_direction;
  double separating_offset = 0.0;
  int iterations = 0;

  bool inside() const {
    return status == MembershipStatus::kInside ||
           status == MembershipStatus::kCertifiedInside;
  }
};

// Lebesgue volume |det(v_1 - v_0, ..., v_d - v_0)| / d! of a simplex given by
// d+1 points in d-space.
double simplex_volume(std::span<const Point> vertices);

// Solves x = sum_i lambda_i p_i with sum_i lambda_i = 1, where the p_i are
// the rows of `points`. Throws SingularSystem on rank deficiency and
// InvalidArgument when x is off the affine hull of the rows.
std::vector<double> barycentric(std::span<const double> x,
                                const Eigen::MatrixXd& points);

struct LpMembershipOptions {
  int max_master_iterations = 20000;
  int max_rounds = 100000;
  // Columns added per pricing round.
  std::size_t columns_per_round = 0;  // 0: dimension + 1
  // Initial working set size, picked nearest to the query.
  std::size_t initial_columns = 0;  // 0: 2 * (dimension + 1)
};

// Is x in conv(cloud)? Column generation around a dense phase-1 simplex.
// Inside verdicts carry verified hull weights; Outside verdicts carry a
// verified separating hyperplane; anything unverifiable is Indeterminate.
MembershipVerdict lp_membership(std::span<const double> x,
                                std::span<const Point> cloud,
                                const LpMembershipOptions& options = {});

// Smaller of the max absolute row sum and max absolute column sum: a bound
// on the modulus of every eigenvalue.
double gershgorin_bound(const Eigen::MatrixXd& m);

// Sufficient containment test for x in conv(rows of P): y = x (I - M) >= 0,
// with y_j = x_j - sum_{i != j} p_ij x_i / p_ii. Returns CertifiedInside or
// Indeterminate, never Outside.
MembershipVerdict neumann_certify(const SimplexPoint& x, const CapMatrix& p);

// The closed-form y vector used by neumann_certify.
std::vector<double> neumann_y(std::span<const double> x, const CapMatrix& p);

// Partial sums (sum_{k<=K} (-M)^k) D^-1, stopping once successive terms fall
// below `tolerance` in max norm. `terms_used` receives K+1.
Eigen::MatrixXd neumann_inverse(const CapMatrix& p, int max_terms,
                                double tolerance, int* terms_used = nullptr);

// Convex polytope whose facets are (d-1)-simplices, each listed by d vertex
// indices (0-based).
struct SimplicialPolytope {
  std::size_t dimension = 0;
  std::vector<Point> vertices;
  std::vector<std::vector<std::size_t>> facets;
  // Optional; the vertex centroid is used when absent.
  std::optional<Point> interior_point;
};

// Throws InvalidArgument naming the offending facet.
void validate(const SimplicialPolytope& polytope);

Point vertex_centroid(const SimplicialPolytope& polytope);

struct TriangulatedPolytope {
  std::size_t dimension = 0;
  // Each simplex lists d+1 vertices.
  std::vector<std::vector<Point>> simplices;
  std::vector<double> volumes;
  // Normalised running sums of volumes; last entry is 1.
  std::vector<double> cumulative;

  double total_volume() const;
};

// Cones every facet to the interior point: one simplex per facet.
TriangulatedPolytope triangulate(const SimplicialPolytope& polytope);

// Uniform point: pick a simplex with probability proportional to volume,
// then map a uniform barycentric weight vector onto it.
Point sample_polytope(const TriangulatedPolytope& tri, RandomStream& stream);

struct PolytopeBody {
  SimplicialPolytope polytope;
  TriangulatedPolytope triangulation;
};

std::shared_ptr<const PolytopeBody> make_polytope_body(
    SimplicialPolytope polytope);

// Standard constructions.
SimplicialPolytope cross_polytope(std::size_t d);
// A d-simplex given by its d+1 vertices, as a polytope with d+1 facets.
SimplicialPolytope simplex_polytope(std::vector<Point> vertices);
// x -> A x + b applied to vertices and interior point.
SimplicialPolytope affine_image(const SimplicialPolytope& polytope,
                                const Eigen::MatrixXd& linear,
                                const Eigen::VectorXd& offset);

}  // namespace hullvol::geometry

#endif  // HULLVOL_GEOMETRY_HPP_
