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

#include "aggpriv/market/market_game.h"

#include <cmath>
#include <utility>

#include "aggpriv/errors.h"
#include "aggpriv/game/json_io.h"
#include "aggpriv/market/pricing.h"

namespace aggpriv::market {

MarketGame::MarketGame(int n, int d, double lambda, Eigen::MatrixXd valuations)
    : n_(n), d_(d), m_(num_portfolios(d)), lambda_(lambda),
      valuations_(std::move(valuations)) {
  if (n < 1) throw ParameterError("market: n must be positive");
  if (!(lambda > 0.0)) throw ParameterError("market: lambda must be positive");
  if (valuations_.rows() != n || valuations_.cols() != m_) {
    throw ParameterError("market: valuations must be n x 3^d");
  }
  if (!valuations_.allFinite() ||
      valuations_.cwiseAbs().maxCoeff() > d + 1e-12) {
    throw ParameterError("market: valuations must lie in [-d, d]");
  }
}

Eigen::VectorXd imbalance(const MarketGame& game, const PureProfile& x) {
  if (static_cast<int>(x.size()) != game.n()) {
    throw ParameterError("market: profile length must equal n");
  }
  Eigen::VectorXd I = Eigen::VectorXd::Zero(game.d());
  for (int a : x) {
    if (a < 0 || a >= game.m()) throw ParameterError("market: bad action");
    for (int k = 0; k < game.d(); ++k) I(k) += portfolio_digit(a, k);
  }
  return I;
}

double trader_utility(const MarketGame& game, int i, int action,
                      const Eigen::Ref<const Eigen::VectorXd>& s) {
  return trader_payoff(game.valuations()(i, action), action, s, game.lambda());
}

double security_loss(double I, double lambda) {
  const double q = hinge_price(I, lambda);
  return I > 0.0 ? I * (1.0 - q) : -I * q;
}

MarketMakerLoss market_maker_loss(const MarketGame& game, const PureProfile& x) {
  const Eigen::VectorXd I = imbalance(game, x);
  MarketMakerLoss out;
  out.per_security.resize(game.d());
  for (int k = 0; k < game.d(); ++k) {
    out.per_security(k) = security_loss(I(k), game.lambda());
  }
  out.total = out.per_security.sum();
  return out;
}

AggregativeGame to_aggregative(const MarketGame& game) {
  std::vector<Eigen::MatrixXd> F(game.d(),
                                 Eigen::MatrixXd::Zero(game.n(), game.m()));
  for (int k = 0; k < game.d(); ++k) {
    for (int j = 0; j < game.m(); ++j) {
      F[k].col(j).setConstant(portfolio_digit(j, k));
    }
  }
  MarketUtility u;
  u.lambda = game.lambda();
  u.valuations = game.valuations();
  return AggregativeGame(game.n(), game.m(), game.d(), 1.0 / game.lambda(),
                         game.n() / game.lambda(), std::move(F), std::move(u));
}

double corollary_eta(int n, double lambda, int d) {
  const double r = n / (lambda * lambda);
  return std::sqrt(static_cast<double>(d)) *
         (std::cbrt(r) + std::sqrt(r));
}

double market_zeta(int n, int d, double lambda) {
  return std::sqrt(8.0 * n * d * std::log(3.0 * n)) / lambda;
}

MarketGame separable_market(int n, int d, double lambda, NoiseSource& src) {
  const int m = num_portfolios(d);
  Eigen::MatrixXd w(n, d);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) w(i, k) = 2.0 * src.uniform() - 1.0;
  }
  Eigen::MatrixXd v(n, m);
  for (int j = 0; j < m; ++j) {
    v.col(j) = w * portfolio_vector(j, d);
  }
  return MarketGame(n, d, lambda, std::move(v));
}

nlohmann::json market_to_json(const MarketGame& game) {
  return {{"n", game.n()},
          {"d", game.d()},
          {"lambda", game.lambda()},
          {"valuations", matrix_to_json(game.valuations())}};
}

MarketGame market_from_json(const nlohmann::json& j) {
  try {
    return MarketGame(j.at("n").get<int>(), j.at("d").get<int>(),
                      j.at("lambda").get<double>(),
                      matrix_from_json(j.at("valuations")));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("market json: ") + e.what());
  }
}

}  // namespace aggpriv::market
