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


#include "ghzlab/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghzlab/errors.hpp"

namespace ghzlab {

FeasibilityResult find_nonnegative_solution(const Eigen::MatrixXd& a,
                                            const Eigen::VectorXd& b,
                                            double tol) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (b.size() != m) throw InputError("simplex: dimension mismatch");
  constexpr double kPivotEps = 1e-12;

  // Columns: n structural, m artificial, then the right-hand side.
  const int rhs = n + m;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const double sign = b(i) < 0 ? -1.0 : 1.0;
    t.row(i).head(n) = sign * a.row(i);
    t(i, n + i) = 1.0;
    t(i, rhs) = sign * b(i);
    basis[i] = n + i;
  }
  // Objective row holds reduced costs of "minimize sum of artificials".
  for (int i = 0; i < m; ++i) {
    t.row(m).head(n) -= t.row(i).head(n);
    t(m, rhs) -= t(i, rhs);
  }

  FeasibilityResult result;
  const int max_pivots = 50 * (n + m);
  while (result.pivots < max_pivots) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (t(m, j) < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t(i, enter) <= kPivotEps) continue;
      const double ratio = t(i, rhs) / t(i, enter);
      if (ratio < best_ratio - kPivotEps ||
          (std::abs(ratio - best_ratio) <= kPivotEps && leave >= 0 &&
           basis[i] < basis[leave])) {
        best_ratio = ratio;
        leave = i;
      }
    }
    // Phase 1 is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave < 0) break;

    t.row(leave) /= t(leave, enter);
    for (int i = 0; i <= m; ++i) {
      if (i != leave && t(i, enter) != 0.0) {
        t.row(i) -= t(i, enter) * t.row(leave);
      }
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  result.phase1_objective = -t(m, rhs);
  result.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) result.x[basis[i]] = std::max(0.0, t(i, rhs));
  }
  const Eigen::Map<const Eigen::VectorXd> x(result.x.data(), n);
  result.max_residual = (a * x - b).cwiseAbs().maxCoeff();
  result.feasible = result.max_residual <= tol;
  return result;
}

}  // namespace ghzlab
