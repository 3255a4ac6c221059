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

#include "aggpriv/presl/presl_params.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "aggpriv/errors.h"

namespace aggpriv {

double existence_bound(int n, int m, double gamma) {
  if (n < 1 || m < 1) throw ParameterError("existence_bound: n, m >= 1");
  return gamma * std::sqrt(8.0 * n * std::log(2.0 * m * n));
}

double presl_e1(int n, int d, double gamma, double W, double epsilon,
                double beta) {
  return 100.0 * gamma / epsilon *
         ((d + 1) * std::log(std::max(2.0 * W, 1.0)) * std::log(n) +
          std::log(6.0 / beta));
}

double presl_e2(int n, int m, int d, double gamma, double epsilon,
                double beta, double delta) {
  const double inner = n * gamma * gamma / epsilon * std::log(3.0 * d / beta) *
                       std::log(n) *
                       std::sqrt(std::log(static_cast<double>(m)) *
                                 std::log(1.0 / delta));
  return 100.0 * std::sqrt(std::max(0.0, inner));
}

long long grid_axis_points(double W, double alpha) {
  const double r = 2.0 * W / alpha;
  return std::max<long long>(1, static_cast<long long>(std::ceil(r - 1e-9)));
}

PreslParams make_presl_params(const AggregativeGame& game,
                              const PreslConfig& config) {
  if (!(config.epsilon > 0.0)) throw ParameterError("presl: epsilon <= 0");
  if (!(config.delta > 0.0 && config.delta < 1.0)) {
    throw ParameterError("presl: delta must lie in (0, 1)");
  }
  if (!(config.beta > 0.0 && config.beta < 1.0)) {
    throw ParameterError("presl: beta must lie in (0, 1)");
  }
  if (config.zeta < 0.0) throw ParameterError("presl: zeta < 0");
  PreslParams p;
  p.config = config;
  p.n = game.n();
  p.m = game.m();
  p.d = game.d();
  p.gamma = game.gamma();
  p.W = game.W();
  p.E1 = presl_e1(p.n, p.d, p.gamma, p.W, config.epsilon, config.beta);
  p.E2 = presl_e2(p.n, p.m, p.d, p.gamma, config.epsilon, config.beta,
                  config.delta);
  p.alpha = config.alpha_override ? *config.alpha_override : p.E1 + p.E2;
  if (!(p.alpha > 0.0)) throw ParameterError("presl: alpha must be positive");
  p.xi = p.gamma + config.zeta + 2.0 * p.alpha;
  p.lp_tolerance = std::min(p.alpha, p.E1 > 0.0 ? p.E1 : p.alpha) / 100.0;
  p.axis_points = grid_axis_points(p.W, p.alpha);
  const double x_size = std::pow(static_cast<double>(p.axis_points), p.d);
  p.y_size = static_cast<long long>(
                 std::floor(p.n * p.gamma / p.alpha + 1e-9)) +
             1;
  if (x_size * static_cast<double>(p.y_size) > config.grid_budget) {
    throw BudgetError("presl: grid has " +
                      std::to_string(x_size * p.y_size) +
                      " points, over the budget");
  }
  p.x_size = static_cast<long long>(x_size);
  return p;
}

QueryGrid::QueryGrid(int d, double W, double alpha, long long axis_points,
                     long long y_size)
    : d_(d), W_(W), alpha_(alpha), axis_(axis_points), y_size_(y_size) {
  x_size_ = 1;
  for (int k = 0; k < d; ++k) x_size_ *= axis_;
}

Eigen::VectorXd QueryGrid::s_hat(long long x_index) const {
  Eigen::VectorXd s(d_);
  long long rem = x_index;
  for (int k = d_ - 1; k >= 0; --k) {
    s(k) = -W_ + alpha_ * static_cast<double>(rem % axis_);
    rem /= axis_;
  }
  return s;
}

}  // namespace aggpriv
