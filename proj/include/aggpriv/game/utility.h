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

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace aggpriv {

// u_i(a_j, s) = constant(i, j) + sum_k slope[k](i, j) * s_k.
struct LinearUtility {
  Eigen::MatrixXd constant;            // n x m
  std::vector<Eigen::MatrixXd> slope;  // d matrices, n x m
};

// Values on a regular grid over [lower, upper], multilinear in between.
// Queries outside the box are clamped to it.
struct TableUtility {
  Eigen::VectorXd lower;    // d
  Eigen::VectorXd upper;    // d
  std::vector<int> points;  // nodes per axis, each >= 2
  int actions = 0;          // m
  // Row i*m + j holds player i's action j at every node; node index is
  // sum_k idx_k * stride_k with axis 0 varying fastest.
  Eigen::MatrixXd values;
};

// Portfolio traders of the hinge-priced market; actions are {-1,0,1}^d.
struct MarketUtility {
  double lambda = 1.0;
  Eigen::MatrixXd valuations;  // n x 3^d, entries in [-d, d]
};

// Binary participation game with a one-dimensional aggregator. Action 0 is
// "in" with utility clamp(weight_i * (s - threshold_i) / 2, -1, 1); action 1
// is "out" with utility 0. With lowest-index tie-breaking a player with
// positive weight joins exactly when s >= threshold_i.
struct ThresholdUtility {
  Eigen::VectorXd thresholds;  // n
  Eigen::VectorXd weights;     // n, entries in [-1, 1]
};

using Utility =
    std::variant<LinearUtility, TableUtility, MarketUtility, ThresholdUtility>;

std::string utility_kind(const Utility& u);

// Evaluates u_i(action, s). No validation; AggregativeGame validates once.
double evaluate_utility(const Utility& u, int player, int action,
                        const Eigen::Ref<const Eigen::VectorXd>& s);

// Checks the structural contract of `u` for an n-player, m-action,
// d-dimensional game whose aggregator lives in [-W, W]^d: shapes, range
// [-1, 1], and 1-Lipschitz in the sup-norm. Throws ParameterError.
void validate_utility(const Utility& u, int n, int m, int d, double W);

}  // namespace aggpriv
