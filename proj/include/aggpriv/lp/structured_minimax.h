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

#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "aggpriv/game/aggregative_game.h"

namespace aggpriv {

// g(p) = sum_{i,j} A(i, j) p_ij + h.
struct MinimaxPiece {
  Eigen::MatrixXd A;  // n x m
  double h = 0.0;
};

// min over the product of support-restricted simplices of max_c g_c(p).
struct MinimaxProblem {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> supports;
  std::vector<MinimaxPiece> pieces;
};

struct MinimaxResult {
  double value = 0.0;  // certified lower bound, within tol of the optimum
  double upper = 0.0;  // max_c g_c(witness)
  MixedProfile witness;
  int iterations = 0;
  bool converged = false;
};

// Column generation over pure profiles with a dense simplex master.
MinimaxResult solve_minimax(const MinimaxProblem& problem, double tol,
                            int max_iterations = 20000);

struct LpMinResult {
  double value = 0.0;
  MixedProfile witness;
  bool converged = false;
};

inline constexpr double kNoObjective = std::numeric_limits<double>::infinity();

// Q(s_hat, y_hat) = min over supported p of
//   max( max_k |gamma<F^k, p> - s_hat_k|, L(p) - y_hat ),
// with L(p) = gamma <loss, p>. y_hat = +inf drops the objective term.
LpMinResult exact_lp_min(const AggregativeGame& game,
                         const Eigen::VectorXd& s_hat, double y_hat,
                         const std::vector<std::vector<int>>& supports,
                         double tol);

// As above with supports R_i = xi-abr_set(i, s_hat).
LpMinResult exact_lp_min(const AggregativeGame& game,
                         const Eigen::VectorXd& s_hat, double y_hat, double xi,
                         double tol);

std::vector<std::vector<int>> abr_supports(const AggregativeGame& game,
                                           const Eigen::VectorXd& s,
                                           double xi);

}  // namespace aggpriv
