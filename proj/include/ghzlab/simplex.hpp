// Copyright 2026 The ghzlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Dense two-phase simplex, phase 1 only: finds x >= 0 with A x = b.

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace ghzlab {

struct FeasibilityResult {
  bool feasible = false;
  std::vector<double> x;           // meaningful when feasible
  double phase1_objective = 0.0;   // sum of artificial variables at optimum
  double max_residual = 0.0;       // || A x - b ||_inf of the clipped solution
  int pivots = 0;
};

/// Minimizes the sum of artificial variables with Bland's rule (no cycling).
/// The answer is decided by the residual of the recovered, clipped solution:
/// feasible iff || A x - b ||_inf <= tol.
FeasibilityResult find_nonnegative_solution(const Eigen::MatrixXd& a,
                                            const Eigen::VectorXd& b,
                                            double tol);

}  // namespace ghzlab
