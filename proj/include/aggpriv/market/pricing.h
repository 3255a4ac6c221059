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

#include <Eigen/Dense>

namespace aggpriv::market {

// Number of portfolio actions {-1, 0, 1}^d.
int num_portfolios(int d);

// Coordinate k of portfolio `action`: base-3 digit k (least significant
// first) mapped 0 -> -1, 1 -> 0, 2 -> +1.
int portfolio_digit(int action, int k);

Eigen::VectorXd portfolio_vector(int action, int d);

// Hinge price of one security at imbalance I: 0 below -lambda/2, 1 above
// lambda/2, I/lambda + 1/2 in between.
double hinge_price(double imbalance, double lambda);

Eigen::VectorXd hinge_price(const Eigen::Ref<const Eigen::VectorXd>& imbalance,
                            double lambda);

// Normalized trader payoff (v - <a, q(lambda * s)>) / (2d) for the portfolio
// `action` with valuation `value` at aggregator s = I / lambda.
double trader_payoff(double value, int action,
                     const Eigen::Ref<const Eigen::VectorXd>& s,
                     double lambda);

}  // namespace aggpriv::market
