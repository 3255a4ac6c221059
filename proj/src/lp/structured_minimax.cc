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

#include "aggpriv/lp/structured_minimax.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"
#include "aggpriv/lp/dense_simplex.h"

namespace aggpriv {
namespace {

// Best pure profile against the piece weights `lambda`.
PureProfile price(const MinimaxProblem& pb, const Eigen::VectorXd& lambda) {
  Eigen::MatrixXd combined = Eigen::MatrixXd::Zero(pb.n, pb.m);
  for (std::size_t c = 0; c < pb.pieces.size(); ++c) {
    if (lambda(c) != 0.0) combined += lambda(c) * pb.pieces[c].A;
  }
  PureProfile x(pb.n);
  for (int i = 0; i < pb.n; ++i) {
    const auto& R = pb.supports[i];
    int arg = R[0];
    for (int j : R) {
      if (combined(i, j) < combined(i, arg)) arg = j;
    }
    x[i] = arg;
  }
  return x;
}

Eigen::VectorXd piece_values(const MinimaxProblem& pb, const PureProfile& x) {
  Eigen::VectorXd g(pb.pieces.size());
  for (std::size_t c = 0; c < pb.pieces.size(); ++c) {
    double acc = pb.pieces[c].h;
    for (int i = 0; i < pb.n; ++i) acc += pb.pieces[c].A(i, x[i]);
    g(c) = acc;
  }
  return g;
}

}  // namespace

MinimaxResult solve_minimax(const MinimaxProblem& pb, double tol,
                            int max_iterations) {
  if (!(tol > 0.0)) throw ParameterError("solve_minimax: tol must be > 0");
  if (pb.pieces.empty()) throw ParameterError("solve_minimax: no pieces");
  if (static_cast<int>(pb.supports.size()) != pb.n) {
    throw ParameterError("solve_minimax: need one support per player");
  }
  for (const auto& R : pb.supports) {
    if (R.empty()) throw ParameterError("solve_minimax: empty support");
  }
  const auto P = static_cast<int>(pb.pieces.size());
  // Shift so every piece value is positive; the master's t stays >= 0.
  double shift = 1.0;
  for (const auto& pc : pb.pieces) {
    shift = std::max(shift, 1.0 + std::abs(pc.h) +
                                pc.A.cwiseAbs().rowwise().maxCoeff().sum());
  }

  std::vector<PureProfile> columns;
  std::vector<Eigen::VectorXd> values;
  auto add_column = [&](const PureProfile& x) {
    for (const auto& c : columns) {
      if (c == x) return false;
    }
    columns.push_back(x);
    values.push_back(piece_values(pb, x));
    return true;
  };
  for (int c = 0; c < P; ++c) {
    add_column(price(pb, Eigen::VectorXd::Unit(P, c)));
  }
  add_column(price(pb, Eigen::VectorXd::Constant(P, 1.0 / P)));

  MinimaxResult res;
  double best_lower = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd mu;
  double upper = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iterations; ++it) {
    res.iterations = it + 1;
    const auto K = static_cast<int>(columns.size());
    // Variables (mu_1..mu_K, t); rows: P piece rows, one convexity row.
    LinearProgram lp;
    lp.A = Eigen::MatrixXd::Zero(P + 1, K + 1);
    lp.b = Eigen::VectorXd::Zero(P + 1);
    lp.types.assign(P, RowType::kLe);
    lp.types.push_back(RowType::kEq);
    lp.c = Eigen::VectorXd::Zero(K + 1);
    lp.c(K) = 1.0;
    for (int k = 0; k < K; ++k) {
      lp.A.block(0, k, P, 1) = values[k].array() + shift;
      lp.A(P, k) = 1.0;
    }
    lp.A.block(0, K, P, 1).setConstant(-1.0);
    lp.b(P) = 1.0;
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::kOptimal) {
      throw InternalError("solve_minimax: master problem not optimal");
    }
    mu = sol.x.head(K);
    upper = sol.objective - shift;
    Eigen::VectorXd lambda = (-sol.duals.head(P)).cwiseMax(0.0);
    const double total = lambda.sum();
    if (total > 0.0) {
      lambda /= total;
    } else {
      lambda.setConstant(1.0 / P);
    }
    const PureProfile x = price(pb, lambda);
    const double lower = lambda.dot(piece_values(pb, x));
    best_lower = std::max(best_lower, lower);
    if (upper - best_lower <= tol) {
      res.converged = true;
      break;
    }
    if (!add_column(x)) {
      // The dual price produced no new column: the master is optimal.
      res.converged = true;
      best_lower = std::max(best_lower, upper - tol);
      break;
    }
  }
  res.witness = MixedProfile::Zero(pb.n, pb.m);
  for (std::size_t k = 0; k < static_cast<std::size_t>(mu.size()); ++k) {
    if (mu(k) <= 0.0) continue;
    for (int i = 0; i < pb.n; ++i) res.witness(i, columns[k][i]) += mu(k);
  }
  // Remove round-off from the mixture weights.
  for (int i = 0; i < pb.n; ++i) {
    const double s = res.witness.row(i).sum();
    res.witness.row(i) /= s;
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& pc : pb.pieces) {
    worst = std::max(worst, pc.A.cwiseProduct(res.witness).sum() + pc.h);
  }
  res.upper = worst;
  res.value = std::min(best_lower, worst);
  return res;
}

std::vector<std::vector<int>> abr_supports(const AggregativeGame& game,
                                           const Eigen::VectorXd& s,
                                           double xi) {
  std::vector<std::vector<int>> R(game.n());
  for (int i = 0; i < game.n(); ++i) R[i] = abr_set(game, i, s, xi);
  return R;
}

LpMinResult exact_lp_min(const AggregativeGame& game,
                         const Eigen::VectorXd& s_hat, double y_hat,
                         const std::vector<std::vector<int>>& supports,
                         double tol) {
  if (!(tol > 0.0)) throw ParameterError("exact_lp_min: tol must be > 0");
  if (s_hat.size() != game.d()) {
    throw ParameterError("exact_lp_min: s_hat must have d entries");
  }
  MinimaxProblem pb;
  pb.n = game.n();
  pb.m = game.m();
  pb.supports = supports;
  for (int k = 0; k < game.d(); ++k) {
    const Eigen::MatrixXd A = game.gamma() * game.influence(k);
    pb.pieces.push_back({A, -s_hat(k)});
    pb.pieces.push_back({-A, s_hat(k)});
  }
  if (std::isfinite(y_hat)) {
    pb.pieces.push_back({game.gamma() * game.loss(), -y_hat});
  }
  const MinimaxResult mm = solve_minimax(pb, tol);
  return {mm.value, mm.witness, mm.converged};
}

LpMinResult exact_lp_min(const AggregativeGame& game,
                         const Eigen::VectorXd& s_hat, double y_hat, double xi,
                         double tol) {
  return exact_lp_min(game, s_hat, y_hat, abr_supports(game, s_hat, xi), tol);
}

}  // namespace aggpriv
