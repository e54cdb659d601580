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

#include "hullvol/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "hullvol/errors.hpp"

namespace hullvol::lp {

FeasibilityResult solve_feasibility(const Eigen::MatrixXd& A,
                                    const Eigen::VectorXd& b,
                                    const FeasibilityOptions& options) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (b.size() != m) throw InvalidArgument("rhs size does not match rows");
  if (m == 0) throw InvalidArgument("feasibility problem has no rows");

  // Tableau: m constraint rows plus the reduced-cost row; columns are the n
  // structural variables, m artificials, and the right-hand side.
  const Eigen::Index cols = n + m + 1;
  const Eigen::Index rhs = n + m;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m + 1, cols);
  std::vector<double> sign(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    sign[i] = b(i) < 0.0 ? -1.0 : 1.0;
    T.row(i).head(n) = sign[i] * A.row(i);
    T(i, n + i) = 1.0;
    T(i, rhs) = sign[i] * b(i);
  }
  for (Eigen::Index j = 0; j < n; ++j) T(m, j) = -T.col(j).head(m).sum();
  T(m, rhs) = -T.col(rhs).head(m).sum();

  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

  FeasibilityResult result;
  int degenerate_run = 0;
  bool optimal = false;
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    const bool bland = degenerate_run >= options.degenerate_switch;
    Eigen::Index enter = -1;
    double best = -options.reduced_cost_tolerance;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      const double r = T(m, j);
      if (r < best) {
        enter = j;
        if (bland) break;
        best = r;
      }
    }
    if (enter < 0) {
      optimal = true;
      break;
    }

    Eigen::Index leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double a = T(i, enter);
      if (a <= options.pivot_tolerance) continue;
      const double ratio = T(i, rhs) / a;
      if (leave < 0 || ratio < best_ratio - 1e-14) {
        leave = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + 1e-14) {
        const bool prefer = bland ? basis[i] < basis[leave]
                                  : a > T(leave, enter);
        if (prefer) {
          leave = i;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
    }
    if (leave < 0) {
      // Unbounded direction cannot occur in phase 1 (objective >= 0); a
      // column with no positive entry is numerically dead, zero it out.
      T(m, enter) = 0.0;
      continue;
    }
    degenerate_run = best_ratio <= 1e-13 ? degenerate_run + 1 : 0;

    const double pivot = T(leave, enter);
    T.row(leave) /= pivot;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = T(i, enter);
      if (f != 0.0) T.row(i) -= f * T.row(leave);
    }
    basis[leave] = enter;
  }
  result.iterations = iter;
  if (!optimal) {
    result.status = FeasibilityStatus::kIterationLimit;
    return result;
  }

  result.objective = std::max(0.0, -T(m, rhs));
  result.dual.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    result.dual(i) = sign[i] * (1.0 - T(m, n + i));
  }

  if (result.objective > options.feasibility_tolerance) {
    result.status = FeasibilityStatus::kInfeasible;
    return result;
  }

  // Re-solve the final basis directly to shed accumulated pivoting error.
  Eigen::MatrixXd B(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < n) {
      B.col(i) = A.col(basis[i]);
    } else {
      B.col(i).setZero();
      B(basis[i] - n, i) = sign[basis[i] - n];
    }
  }
  const Eigen::VectorXd wb = B.fullPivLu().solve(b);
  result.weights = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < n) result.weights(basis[i]) = wb(i);
  }
  result.status = FeasibilityStatus::kFeasible;
  return result;
}

}  // namespace hullvol::lp
