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

#ifndef HULLVOL_LP_HPP_
#define HULLVOL_LP_HPP_

#include <Eigen/Dense>

namespace hullvol::lp {

enum class FeasibilityStatus { kFeasible, kInfeasible, kIterationLimit };

struct FeasibilityOptions {
  int max_iterations = 20000;
  // Phase-1 objective at or below this value counts as feasible.
  double feasibility_tolerance = 1e-10;
  double pivot_tolerance = 1e-11;
  double reduced_cost_tolerance = 1e-12;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_switch = 50;
};

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::kIterationLimit;
  // w >= 0 solving A w = b when feasible (refined by a direct basis solve).
  Eigen::VectorXd weights;
  // Phase-1 duals: pi^T A_j <= 0 for every column at optimality, and
  // pi^T b equals the phase-1 objective. A positive objective makes pi a
  // Farkas certificate of infeasibility.
  Eigen::VectorXd dual;
  double objective = 0.0;
  int iterations = 0;
};

// Dense phase-1 primal simplex for {w >= 0 : A w = b}. Suitable for a few
// dozen rows and a few thousand columns; callers with larger column sets
// should price columns in from outside (see geometry::lp_membership).
FeasibilityResult solve_feasibility(const Eigen::MatrixXd& A,
                                    const Eigen::VectorXd& b,
                                    const FeasibilityOptions& options = {});

}  // namespace hullvol::lp

#endif  // HULLVOL_LP_HPP_
