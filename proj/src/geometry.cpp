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

#include "hullvol/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "hullvol/errors.hpp"
#include "hullvol/lp.hpp"

namespace hullvol::geometry {
namespace {

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

std::string facet_label(std::size_t f) { return "facet " + std::to_string(f); }

}  // namespace

CapMatrix::CapMatrix(Eigen::MatrixXd entries, double alpha)
    : entries_(std::move(entries)), alpha_(alpha) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw InvalidArgument("cap matrix must be square and nonempty");
  }
  if (!(alpha_ > 0.0 && alpha_ < 0.5)) {
    throw InvalidArgument("cap matrix alpha must lie in (0, 1/2)");
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    const auto row = entries_.row(i);
    if ((row.array() < 0.0).any()) {
      throw InvalidArgument("cap matrix row " + std::to_string(i) +
                            " has a negative entry");
    }
    if (std::abs(row.sum() - 1.0) > kSimplexSumTolerance) {
      throw InvalidArgument("cap matrix row " + std::to_string(i) +
                            " does not sum to 1");
    }
    if (entries_(i, i) < 1.0 - alpha_) {
      throw InvalidArgument("cap matrix row " + std::to_string(i) +
                            " is outside its cap");
    }
  }
}

CapMatrix CapMatrix::from_points(std::span<const SimplexPoint> rows,
                                 double alpha) {
  const auto d = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd p(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (static_cast<Eigen::Index>(rows[i].dimension()) != d) {
      throw InvalidArgument("cap point dimension mismatch");
    }
    for (Eigen::Index j = 0; j < d; ++j) p(i, j) = rows[i].coords[j];
  }
  return CapMatrix(std::move(p), alpha);
}

Eigen::MatrixXd CapMatrix::iteration_matrix() const {
  Eigen::MatrixXd m = entries_;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double diag = entries_(i, i);
    m.row(i) /= diag;
    m(i, i) = 0.0;
  }
  return m;
}

std::string_view membership_status_name(MembershipStatus status) {
  switch (status) {
    case MembershipStatus::kCertifiedInside:
      return "certified_inside";
    case MembershipStatus::kInside:
      return "inside";
    case MembershipStatus::kOutside:
      return "outside";
    case MembershipStatus::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

double simplex_volume(std::span<const Point> vertices) {
  if (vertices.empty()) throw InvalidArgument("simplex has no vertices");
  const std::size_t d = vertices.size() - 1;
  if (d == 0) throw InvalidArgument("simplex needs at least 2 vertices");
  Eigen::MatrixXd edges(d, d);
  for (std::size_t k = 0; k <= d; ++k) {
    if (vertices[k].size() != d) {
      throw InvalidArgument("simplex of " + std::to_string(d + 1) +
                            " vertices needs points of dimension " +
                            std::to_string(d));
    }
  }
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      edges(k - 1, j) = vertices[k][j] - vertices[0][j];
    }
  }
  return std::abs(edges.determinant()) / factorial(d);
}

std::vector<double> barycentric(std::span<const double> x,
                                const Eigen::MatrixXd& points) {
  const Eigen::Index k = points.rows();
  const Eigen::Index n = points.cols();
  if (k == 0) throw InvalidArgument("no points given");
  if (static_cast<Eigen::Index>(x.size()) != n) {
    throw InvalidArgument("query dimension does not match points");
  }
  Eigen::MatrixXd system(n + 1, k);
  system.topRows(n) = points.transpose();
  system.row(n).setOnes();
  Eigen::VectorXd rhs(n + 1);
  for (Eigen::Index j = 0; j < n; ++j) rhs(j) = x[j];
  rhs(n) = 1.0;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  const double condition = smin > 0.0 ? smax / smin
                                      : std::numeric_limits<double>::infinity();
  if (!(condition < 1e12) || k > n + 1) {
    throw SingularSystem("barycentric system is rank deficient (condition " +
                             std::to_string(condition) + ")",
                         condition);
  }
  const Eigen::VectorXd lambda = svd.solve(rhs);
  const Eigen::VectorXd residual = system * lambda - rhs;
  if (residual.cwiseAbs().maxCoeff() > kReconstructionTolerance) {
    throw InvalidArgument("query point is not on the affine hull of the points");
  }
  return {lambda.data(), lambda.data() + lambda.size()};
}

MembershipVerdict lp_membership(std::span<const double> x,
                                std::span<const Point> cloud,
                                const LpMembershipOptions& options) {
  const std::size_t n_points = cloud.size();
  const std::size_t d = x.size();
  if (n_points == 0) throw InvalidArgument("cloud is empty");
  if (d == 0) throw InvalidArgument("query point is empty");
  for (const auto& q : cloud) {
    if (q.size() != d) throw InvalidArgument("cloud point dimension mismatch");
  }
  const std::size_t m = d + 1;
  const std::size_t per_round =
      options.columns_per_round ? options.columns_per_round : m;
  const std::size_t initial = std::min(
      n_points, options.initial_columns ? options.initial_columns : 2 * m);

  // Working set: the points nearest to x.
  std::vector<std::size_t> working(n_points);
  std::iota(working.begin(), working.end(), std::size_t{0});
  if (initial < n_points) {
    std::vector<double> dist(n_points);
    for (std::size_t j = 0; j < n_points; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double diff = cloud[j][c] - x[c];
        s += diff * diff;
      }
      dist[j] = s;
    }
    std::nth_element(working.begin(), working.begin() + initial, working.end(),
                     [&](std::size_t a, std::size_t b) {
                       return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
                     });
    working.resize(initial);
    std::sort(working.begin(), working.end());
  }
  std::vector<char> in_working(n_points, 0);
  for (auto j : working) in_working[j] = 1;

  Eigen::VectorXd b(m);
  for (std::size_t c = 0; c < d; ++c) b(c) = x[c];
  b(d) = 1.0;

  lp::FeasibilityOptions lp_options;
  lp_options.max_iterations = options.max_master_iterations;

  MembershipVerdict verdict;
  for (int round = 0; round < options.max_rounds; ++round) {
    Eigen::MatrixXd A(m, working.size());
    for (std::size_t k = 0; k < working.size(); ++k) {
      const auto& q = cloud[working[k]];
      for (std::size_t c = 0; c < d; ++c) A(c, k) = q[c];
      A(d, k) = 1.0;
    }
    const auto master = lp::solve_feasibility(A, b, lp_options);
    verdict.iterations += master.iterations;
    if (master.status == lp::FeasibilityStatus::kIterationLimit) {
      verdict.status = MembershipStatus::kIndeterminate;
      return verdict;
    }

    if (master.status == lp::FeasibilityStatus::kFeasible) {
      std::vector<double> lambda(n_points, 0.0);
      for (std::size_t k = 0; k < working.size(); ++k) {
        lambda[working[k]] = master.weights(static_cast<Eigen::Index>(k));
      }
      double sum = 0.0;
      double min_weight = 0.0;
      std::vector<double> recon(d, 0.0);
      for (auto j : working) {
        const double w = lambda[j];
        sum += w;
        min_weight = std::min(min_weight, w);
        for (std::size_t c = 0; c < d; ++c) recon[c] += w * cloud[j][c];
      }
      double err = std::abs(sum - 1.0);
      for (std::size_t c = 0; c < d; ++c) {
        err = std::max(err, std::abs(recon[c] - x[c]));
      }
      if (min_weight < -kCoefficientTolerance ||
          err > kReconstructionTolerance) {
        verdict.status = MembershipStatus::kIndeterminate;
        return verdict;
      }
      verdict.status = MembershipStatus::kInside;
      verdict.coefficients = std::move(lambda);
      return verdict;
    }

    // Infeasible on the working set: price the remaining points against the
    // Farkas direction (a, c): a.q + c <= 0 on the working set, a.x + c > 0.
    const Eigen::VectorXd& pi = master.dual;
    const double scale = std::max(1.0, pi.cwiseAbs().maxCoeff());
    const double price_tol = 1e-10 * scale;
    std::vector<std::pair<double, std::size_t>> violators;
    double max_score = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n_points; ++j) {
      double s = pi(static_cast<Eigen::Index>(d));
      for (std::size_t c = 0; c < d; ++c) {
        s += pi(static_cast<Eigen::Index>(c)) * cloud[j][c];
      }
      max_score = std::max(max_score, s);
      if (!in_working[j] && s > price_tol) violators.emplace_back(s, j);
    }

    if (violators.empty()) {
      double ax = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        ax += pi(static_cast<Eigen::Index>(c)) * x[c];
      }
      const double offset = -(max_score - pi(static_cast<Eigen::Index>(d)));
      const double margin = ax + offset;
      if (!(margin > 1e-12 * scale)) {
        verdict.status = MembershipStatus::kIndeterminate;
        return verdict;
      }
      verdict.status = MembershipStatus::kOutside;
      verdict.separating_direction =
          std::vector<double>(pi.data(), pi.data() + d);
      verdict.separating_offset = offset;
      return verdict;
    }

    const std::size_t take = std::min(per_round, violators.size());
    std::partial_sort(violators.begin(), violators.begin() + take,
                      violators.end(), [](const auto& a, const auto& b) {
                        return a.first > b.first ||
                               (a.first == b.first && a.second < b.second);
                      });
    for (std::size_t k = 0; k < take; ++k) {
      working.push_back(violators[k].second);
      in_working[violators[k].second] = 1;
    }
  }
  verdict.status = MembershipStatus::kIndeterminate;
  return verdict;
}

double gershgorin_bound(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix must be square");
  if (m.size() == 0) return 0.0;
  const Eigen::MatrixXd a = m.cwiseAbs();
  const double rows = a.rowwise().sum().maxCoeff();
  const double cols = a.colwise().sum().maxCoeff();
  return std::min(rows, cols);
}

std::vector<double> neumann_y(std::span<const double> x, const CapMatrix& p) {
  const std::size_t d = p.dimension();
  if (x.size() != d) throw InvalidArgument("point dimension mismatch");
  const auto& e = p.entries();
  std::vector<double> y(d);
  for (std::size_t j = 0; j < d; ++j) {
    double s = x[j];
    for (std::size_t i = 0; i < d; ++i) {
      if (i == j) continue;
      const auto ii = static_cast<Eigen::Index>(i);
      s -= e(ii, static_cast<Eigen::Index>(j)) / e(ii, ii) * x[i];
    }
    y[j] = s;
  }
  return y;
}

MembershipVerdict neumann_certify(const SimplexPoint& x, const CapMatrix& p) {
  if (x.dimension() != p.dimension()) {
    throw InvalidArgument("point dimension mismatch");
  }
  const double bound = gershgorin_bound(p.iteration_matrix());
  if (!(bound < 1.0)) {
    throw NonConvergence(
        "Gershgorin bound on the iteration matrix is >= 1; series "
        "convergence unproven");
  }
  MembershipVerdict verdict;
  const auto y = neumann_y(x.coords, p);
  if (std::any_of(y.begin(), y.end(), [](double v) { return v < 0.0; })) {
    verdict.status = MembershipStatus::kIndeterminate;
    return verdict;
  }
  verdict.status = MembershipStatus::kCertifiedInside;
  try {
    verdict.coefficients = barycentric(x.coords, p.entries());
  } catch (const std::exception&) {
    // The certificate stands on its own; weights are a convenience.
  }
  return verdict;
}

Eigen::MatrixXd neumann_inverse(const CapMatrix& p, int max_terms,
                                double tolerance, int* terms_used) {
  if (max_terms < 1) throw InvalidArgument("max_terms must be >= 1");
  const Eigen::MatrixXd m = p.iteration_matrix();
  const auto d = m.rows();
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd sum = term;
  int k = 1;
  for (; k < max_terms; ++k) {
    term = -(term * m);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < tolerance) {
      ++k;
      break;
    }
  }
  if (terms_used) *terms_used = k;
  const Eigen::VectorXd inv_diag = p.entries().diagonal().cwiseInverse();
  return sum * inv_diag.asDiagonal();
}

Point vertex_centroid(const SimplicialPolytope& polytope) {
  Point c(polytope.dimension, 0.0);
  for (const auto& v : polytope.vertices) {
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += v[j];
  }
  for (auto& v : c) v /= static_cast<double>(polytope.vertices.size());
  return c;
}

void validate(const SimplicialPolytope& polytope) {
  const std::size_t d = polytope.dimension;
  if (d == 0) throw InvalidArgument("polytope dimension must be >= 1");
  if (polytope.vertices.size() < d + 1) {
    throw InvalidArgument("polytope needs at least d+1 vertices");
  }
  for (std::size_t k = 0; k < polytope.vertices.size(); ++k) {
    if (polytope.vertices[k].size() != d) {
      throw InvalidArgument("vertex " + std::to_string(k) +
                            " has the wrong dimension");
    }
  }
  if (polytope.facets.empty()) throw InvalidArgument("polytope has no facets");
  if (polytope.interior_point && polytope.interior_point->size() != d) {
    throw InvalidArgument("interior point has the wrong dimension");
  }
  const Point centroid = vertex_centroid(polytope);
  const Point interior = polytope.interior_point.value_or(centroid);

  for (std::size_t f = 0; f < polytope.facets.size(); ++f) {
    const auto& facet = polytope.facets[f];
    if (facet.size() != d) {
      throw InvalidArgument(facet_label(f) + " must list exactly " +
                            std::to_string(d) + " vertices");
    }
    auto sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument(facet_label(f) + " repeats a vertex index");
    }
    if (sorted.back() >= polytope.vertices.size()) {
      throw InvalidArgument(facet_label(f) + " has an out-of-range index");
    }

    // Normal of the facet hyperplane.
    const auto& v0 = polytope.vertices[facet[0]];
    Eigen::VectorXd normal(d);
    if (d == 1) {
      normal(0) = 1.0;
    } else {
      Eigen::MatrixXd edges(d - 1, d);
      for (std::size_t k = 1; k < d; ++k) {
        for (std::size_t j = 0; j < d; ++j) {
          edges(k - 1, j) = polytope.vertices[facet[k]][j] - v0[j];
        }
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(edges);
      const Eigen::MatrixXd kernel = lu.kernel();
      if (lu.rank() != static_cast<Eigen::Index>(d - 1) || kernel.cols() != 1) {
        throw InvalidArgument(facet_label(f) + " is degenerate");
      }
      normal = kernel.col(0).normalized();
    }
    double side_interior = 0.0;
    double side_centroid = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      side_interior += normal(j) * (interior[j] - v0[j]);
      side_centroid += normal(j) * (centroid[j] - v0[j]);
    }
    if (std::abs(side_interior) <= 1e-12 ||
        std::abs(side_centroid) <= 1e-12 ||
        (side_interior > 0.0) != (side_centroid > 0.0)) {
      throw InvalidArgument("interior point is not strictly inside " +
                            facet_label(f));
    }
  }
}

double TriangulatedPolytope::total_volume() const {
  return std::accumulate(volumes.begin(), volumes.end(), 0.0);
}

TriangulatedPolytope triangulate(const SimplicialPolytope& polytope) {
  validate(polytope);
  const Point apex = polytope.interior_point.value_or(vertex_centroid(polytope));
  TriangulatedPolytope tri;
  tri.dimension = polytope.dimension;
  tri.simplices.reserve(polytope.facets.size());
  tri.volumes.reserve(polytope.facets.size());
  for (std::size_t f = 0; f < polytope.facets.size(); ++f) {
    std::vector<Point> simplex;
    simplex.reserve(polytope.dimension + 1);
    simplex.push_back(apex);
    for (auto idx : polytope.facets[f]) simplex.push_back(polytope.vertices[idx]);
    const double vol = simplex_volume(simplex);
    if (!(vol > 0.0)) {
      throw InvalidArgument("cone over " + facet_label(f) +
                            " has zero volume; interior point is not interior");
    }
    tri.simplices.push_back(std::move(simplex));
    tri.volumes.push_back(vol);
  }
  const double total = tri.total_volume();
  tri.cumulative.resize(tri.volumes.size());
  double running = 0.0;
  for (std::size_t k = 0; k < tri.volumes.size(); ++k) {
    running += tri.volumes[k];
    tri.cumulative[k] = running / total;
  }
  tri.cumulative.back() = 1.0;
  return tri;
}

Point sample_polytope(const TriangulatedPolytope& tri, RandomStream& stream) {
  if (tri.simplices.empty()) throw InvalidArgument("empty triangulation");
  const double u = stream.uniform();
  auto it = std::upper_bound(tri.cumulative.begin(), tri.cumulative.end(), u);
  const std::size_t k = std::min<std::size_t>(
      static_cast<std::size_t>(it - tri.cumulative.begin()),
      tri.simplices.size() - 1);
  const auto& simplex = tri.simplices[k];
  std::vector<double> w(simplex.size());
  double total = 0.0;
  for (auto& v : w) {
    v = stream.exponential();
    total += v;
  }
  Point p(tri.dimension, 0.0);
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    const double wi = w[i] / total;
    for (std::size_t j = 0; j < tri.dimension; ++j) p[j] += wi * simplex[i][j];
  }
  return p;
}

std::shared_ptr<const PolytopeBody> make_polytope_body(
    SimplicialPolytope polytope) {
  auto tri = triangulate(polytope);
  return std::make_shared<const PolytopeBody>(
      PolytopeBody{std::move(polytope), std::move(tri)});
}

SimplicialPolytope cross_polytope(std::size_t d) {
  if (d == 0 || d > 20) throw InvalidArgument("cross-polytope needs 1 <= d <= 20");
  SimplicialPolytope poly;
  poly.dimension = d;
  for (std::size_t i = 0; i < d; ++i) {
    Point plus(d, 0.0), minus(d, 0.0);
    plus[i] = 1.0;
    minus[i] = -1.0;
    poly.vertices.push_back(std::move(plus));   // index 2i
    poly.vertices.push_back(std::move(minus));  // index 2i+1
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<std::size_t> facet(d);
    for (std::size_t i = 0; i < d; ++i) facet[i] = 2 * i + ((mask >> i) & 1U);
    poly.facets.push_back(std::move(facet));
  }
  poly.interior_point = Point(d, 0.0);
  return poly;
}

SimplicialPolytope simplex_polytope(std::vector<Point> vertices) {
  if (vertices.size() < 2) throw InvalidArgument("simplex needs >= 2 vertices");
  SimplicialPolytope poly;
  poly.dimension = vertices.size() - 1;
  poly.vertices = std::move(vertices);
  for (std::size_t skip = 0; skip < poly.vertices.size(); ++skip) {
    std::vector<std::size_t> facet;
    for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
      if (k != skip) facet.push_back(k);
    }
    poly.facets.push_back(std::move(facet));
  }
  return poly;
}

SimplicialPolytope affine_image(const SimplicialPolytope& polytope,
                                const Eigen::MatrixXd& linear,
                                const Eigen::VectorXd& offset) {
  const auto d = static_cast<Eigen::Index>(polytope.dimension);
  if (linear.rows() != d || linear.cols() != d || offset.size() != d) {
    throw InvalidArgument("affine map dimension mismatch");
  }
  auto apply = [&](const Point& p) {
    const Eigen::Map<const Eigen::VectorXd> v(p.data(), d);
    const Eigen::VectorXd out = linear * v + offset;
    return Point(out.data(), out.data() + d);
  };
  SimplicialPolytope image = polytope;
  for (auto& v : image.vertices) v = apply(v);
  if (image.interior_point) image.interior_point = apply(*image.interior_point);
  return image;
}

}  // namespace hullvol::geometry
