// Copyright 2026 The aggpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace aggpriv {

enum class RowType { kLe, kEq, kGe };

// minimize c'x subject to A x (<=, =, >=) b row-wise and x >= 0.
struct LinearProgram {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  std::vector<RowType> types;
  Eigen::VectorXd c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::kIterationLimit;
  Eigen::VectorXd x;
  double objective = 0.0;
  // Row multipliers y with c - A'y >= 0 on the optimal basis.
  Eigen::VectorXd duals;
};

// Two-phase tableau simplex with Bland's rule. Intended for the small
// master problems of the structured minimax solver.
LpSolution solve_lp(const LinearProgram& lp, int max_pivots = 100000);

}  // namespace aggpriv
