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

#include "aggpriv/lp/dense_simplex.h"

#include <cmath>
#include <limits>

#include "aggpriv/errors.h"

namespace aggpriv {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-11;

struct Tableau {
  // Rows 0..r-1 constraints, row r objective; last column is the rhs.
  Eigen::MatrixXd t;
  std::vector<int> basis;
  int rows = 0;
  int cols = 0;

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int i = 0; i <= rows; ++i) {
      if (i == row) continue;
      const double factor = t(i, col);
      if (factor != 0.0) t.row(i) -= factor * t.row(row);
    }
    basis[row] = col;
  }

  // Bland's rule. Returns false when unbounded.
  LpStatus optimize(const std::vector<bool>& allowed, int& budget) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (allowed[j] && t(rows, j) < -kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows; ++i) {
        if (t(i, enter) > kPivotTol) {
          const double ratio = t(i, cols) / t(i, enter);
          if (ratio < best - 1e-14 ||
              (leave >= 0 && std::abs(ratio - best) <= 1e-14 &&
               basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      if (budget-- <= 0) return LpStatus::kIterationLimit;
      pivot(leave, enter);
    }
  }

  void set_objective(const Eigen::VectorXd& cost) {
    t.row(rows).setZero();
    t.row(rows).head(cols) = cost.transpose();
    for (int i = 0; i < rows; ++i) {
      const double cb = cost(basis[i]);
      if (cb != 0.0) t.row(rows) -= cb * t.row(i);
    }
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, int max_pivots) {
  const auto r = static_cast<int>(lp.A.rows());
  const auto nv = static_cast<int>(lp.A.cols());
  if (lp.b.size() != r || static_cast<int>(lp.types.size()) != r ||
      lp.c.size() != nv) {
    throw ParameterError("solve_lp: inconsistent dimensions");
  }
  // Standard form: flip rows so b >= 0, then add slack/surplus and
  // artificial columns.
  std::vector<double> sign(r, 1.0);
  std::vector<RowType> types = lp.types;
  for (int i = 0; i < r; ++i) {
    if (lp.b(i) < 0.0) {
      sign[i] = -1.0;
      if (types[i] == RowType::kLe) {
        types[i] = RowType::kGe;
      } else if (types[i] == RowType::kGe) {
        types[i] = RowType::kLe;
      }
    }
  }
  int n_slack = 0;
  int n_art = 0;
  for (auto ty : types) {
    if (ty != RowType::kEq) ++n_slack;
    if (ty != RowType::kLe) ++n_art;
  }
  const int cols = nv + n_slack + n_art;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(r, cols);
  Eigen::VectorXd rhs(r);
  std::vector<int> basis(r, -1);
  int slack = nv;
  int art = nv + n_slack;
  for (int i = 0; i < r; ++i) {
    S.row(i).head(nv) = sign[i] * lp.A.row(i);
    rhs(i) = sign[i] * lp.b(i);
    if (types[i] == RowType::kLe) {
      S(i, slack) = 1.0;
      basis[i] = slack++;
    } else if (types[i] == RowType::kGe) {
      S(i, slack++) = -1.0;
      S(i, art) = 1.0;
      basis[i] = art++;
    } else {
      S(i, art) = 1.0;
      basis[i] = art++;
    }
  }

  Tableau tab;
  tab.rows = r;
  tab.cols = cols;
  tab.basis = basis;
  tab.t = Eigen::MatrixXd::Zero(r + 1, cols + 1);
  tab.t.topLeftCorner(r, cols) = S;
  tab.t.col(cols).head(r) = rhs;

  int budget = max_pivots;
  LpSolution sol;
  std::vector<bool> allowed(cols, true);
  if (n_art > 0) {
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(cols);
    phase1.tail(n_art).setOnes();
    tab.set_objective(phase1);
    const LpStatus st = tab.optimize(allowed, budget);
    if (st == LpStatus::kIterationLimit) {
      sol.status = st;
      return sol;
    }
    if (-tab.t(r, cols) > 1e-9 * (1.0 + rhs.cwiseAbs().maxCoeff())) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Drive artificials out of the basis where possible.
    const int first_art = nv + n_slack;
    for (int i = 0; i < r; ++i) {
      if (tab.basis[i] < first_art) continue;
      for (int j = 0; j < first_art; ++j) {
        if (std::abs(tab.t(i, j)) > 1e-9) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (int j = first_art; j < cols; ++j) allowed[j] = false;
  }
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols);
  cost.head(nv) = lp.c;
  tab.set_objective(cost);
  const LpStatus st = tab.optimize(allowed, budget);
  sol.status = st;
  if (st != LpStatus::kOptimal) return sol;

  sol.x = Eigen::VectorXd::Zero(nv);
  for (int i = 0; i < r; ++i) {
    if (tab.basis[i] < nv) sol.x(tab.basis[i]) = tab.t(i, cols);
  }
  sol.objective = lp.c.dot(sol.x);
  Eigen::MatrixXd B(r, r);
  Eigen::VectorXd cb(r);
  for (int i = 0; i < r; ++i) {
    B.col(i) = S.col(tab.basis[i]);
    cb(i) = cost(tab.basis[i]);
  }
  Eigen::VectorXd y = B.transpose().fullPivLu().solve(cb);
  sol.duals.resize(r);
  for (int i = 0; i < r; ++i) sol.duals(i) = sign[i] * y(i);
  return sol;
}

}  // namespace aggpriv
