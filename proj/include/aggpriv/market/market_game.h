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

#include <Eigen/Dense>
#include <json.hpp>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/game/aggregative_game.h"

namespace aggpriv::market {

// n traders, d securities, actions {-1, 0, 1}^d in base-3 order.
class MarketGame {
 public:
  MarketGame(int n, int d, double lambda, Eigen::MatrixXd valuations);

  int n() const { return n_; }
  int d() const { return d_; }
  int m() const { return m_; }
  double lambda() const { return lambda_; }
  const Eigen::MatrixXd& valuations() const { return valuations_; }

 private:
  int n_;
  int d_;
  int m_;
  double lambda_;
  Eigen::MatrixXd valuations_;  // n x 3^d, entries in [-d, d]
};

// I_k = sum_i (x_i)_k.
Eigen::VectorXd imbalance(const MarketGame& game, const PureProfile& x);

// (v_i(a) - <a, q(lambda s)>) / (2d).
double trader_utility(const MarketGame& game, int i, int action,
                      const Eigen::Ref<const Eigen::VectorXd>& s);

// I (1 - q) for positive imbalance, -I q for negative.
double security_loss(double imbalance, double lambda);

struct MarketMakerLoss {
  Eigen::VectorXd per_security;
  double total = 0.0;
};

MarketMakerLoss market_maker_loss(const MarketGame& game, const PureProfile& x);

// d-dimensional aggregative game with S = I / lambda, gamma = 1/lambda and
// W = n / lambda.
AggregativeGame to_aggregative(const MarketGame& game);

// sqrt(d) ((n/lambda^2)^(1/3) + (n/lambda^2)^(1/2)).
double corollary_eta(int n, double lambda, int d);

// sqrt(8 n d ln(3n)) / lambda.
double market_zeta(int n, int d, double lambda);

// v_i(a) = sum_k w_ik a_k with w_ik uniform in [-1, 1].
MarketGame separable_market(int n, int d, double lambda, NoiseSource& src);

nlohmann::json market_to_json(const MarketGame& game);
MarketGame market_from_json(const nlohmann::json& j);

}  // namespace aggpriv::market
