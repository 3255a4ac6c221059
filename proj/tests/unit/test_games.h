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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "aggpriv/game/aggregative_game.h"

namespace aggpriv::testing {

// Game with LINEAR utilities u_i(j, s) = c(i, j) + sum_k w[k](i, j) s_k.
inline AggregativeGame linear_game(double gamma, double W,
                                   std::vector<Eigen::MatrixXd> f,
                                   Eigen::MatrixXd c,
                                   std::vector<Eigen::MatrixXd> w,
                                   std::optional<Eigen::MatrixXd> loss = {}) {
  const int n = static_cast<int>(c.rows());
  const int m = static_cast<int>(c.cols());
  const int d = static_cast<int>(f.size());
  return AggregativeGame(n, m, d, gamma, W, std::move(f),
                         LinearUtility{std::move(c), std::move(w)},
                         std::move(loss));
}

inline AggregativeGame constant_game(int n, int m, int d, double gamma,
                                     double value = 0.0) {
  std::vector<Eigen::MatrixXd> f(d, Eigen::MatrixXd::Constant(n, m, 1.0));
  std::vector<Eigen::MatrixXd> w(d, Eigen::MatrixXd::Zero(n, m));
  return linear_game(gamma, gamma * n, std::move(f),
                     Eigen::MatrixXd::Constant(n, m, value), std::move(w),
                     Eigen::MatrixXd::Zero(n, m));
}

}  // namespace aggpriv::testing
