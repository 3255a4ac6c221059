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

#include <cstdint>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "aggpriv/game/aggregative_game.h"

namespace aggpriv {

// gamma * sqrt(8 n ln(2 m n)).
double existence_bound(int n, int m, double gamma);

struct PreslConfig {
  double zeta = 0.0;
  double epsilon = 1.0;
  double delta = 1e-3;
  double beta = 0.05;
  // Replaces alpha = E1 + E2 when set.
  std::optional<double> alpha_override;
  double grid_budget = 1e7;
  int threads = 1;
};

struct PreslParams {
  PreslConfig config;
  int n = 0;
  int m = 0;
  int d = 0;
  double gamma = 0.0;
  double W = 0.0;
  double E1 = 0.0;
  double E2 = 0.0;
  double alpha = 0.0;
  double xi = 0.0;            // gamma + zeta + 2 alpha
  double lp_tolerance = 0.0;  // min(alpha, E1) / 100
  long long axis_points = 0;  // per-coordinate size of X
  long long x_size = 0;       // |X|
  long long y_size = 0;       // |Y|
};

// E1 = (100 gamma/eps)((d+1) ln(2W) ln n + ln(6/beta)).
double presl_e1(int n, int d, double gamma, double W, double epsilon,
                double beta);
// E2 = 100 (n gamma^2/eps ln(3d/beta) ln n sqrt(ln m ln(1/delta)))^(1/2).
double presl_e2(int n, int m, int d, double gamma, double epsilon,
                double beta, double delta);

// Derives every quantity and enforces the grid budget (BudgetError).
PreslParams make_presl_params(const AggregativeGame& game,
                              const PreslConfig& config);

// Enumeration of (y_hat, s_hat): y_hat ascending, s_hat lexicographic with
// coordinate 0 most significant. Query q has y level q / |X|.
class QueryGrid {
 public:
  QueryGrid(int d, double W, double alpha, long long axis_points,
            long long y_size);
  explicit QueryGrid(const PreslParams& p)
      : QueryGrid(p.d, p.W, p.alpha, p.axis_points, p.y_size) {}

  long long size() const { return x_size_ * y_size_; }
  long long x_size() const { return x_size_; }
  long long y_size() const { return y_size_; }

  Eigen::VectorXd s_hat(long long x_index) const;
  double y_hat(long long y_index) const { return alpha_ * y_index; }
  long long x_index(long long q) const { return q % x_size_; }
  long long y_index(long long q) const { return q / x_size_; }
  std::pair<double, Eigen::VectorXd> operator[](long long q) const {
    return {y_hat(y_index(q)), s_hat(x_index(q))};
  }

 private:
  int d_;
  double W_;
  double alpha_;
  long long axis_;
  long long x_size_;
  long long y_size_;
};

// Number of points of {-W, -W + alpha, ...} strictly below W.
long long grid_axis_points(double W, double alpha);

}  // namespace aggpriv
