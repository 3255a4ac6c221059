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

#include "aggpriv/market/pricing.h"

#include "aggpriv/errors.h"

namespace aggpriv::market {

int num_portfolios(int d) {
  if (d < 1 || d > 12) throw ParameterError("market: d must be in [1, 12]");
  int m = 1;
  for (int k = 0; k < d; ++k) m *= 3;
  return m;
}

int portfolio_digit(int action, int k) {
  for (int t = 0; t < k; ++t) action /= 3;
  return action % 3 - 1;
}

Eigen::VectorXd portfolio_vector(int action, int d) {
  Eigen::VectorXd a(d);
  for (int k = 0; k < d; ++k) a(k) = portfolio_digit(action, k);
  return a;
}

double hinge_price(double imbalance, double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("hinge_price: lambda must be > 0");
  if (imbalance < -lambda / 2.0) return 0.0;
  if (imbalance > lambda / 2.0) return 1.0;
  return imbalance / lambda + 0.5;
}

Eigen::VectorXd hinge_price(const Eigen::Ref<const Eigen::VectorXd>& imbalance,
                            double lambda) {
  Eigen::VectorXd q(imbalance.size());
  for (Eigen::Index k = 0; k < imbalance.size(); ++k) {
    q(k) = hinge_price(imbalance(k), lambda);
  }
  return q;
}

double trader_payoff(double value, int action,
                     const Eigen::Ref<const Eigen::VectorXd>& s,
                     double lambda) {
  const auto d = static_cast<int>(s.size());
  double payment = 0.0;
  int code = action;
  for (int k = 0; k < d; ++k) {
    const int digit = code % 3 - 1;
    code /= 3;
    if (digit != 0) payment += digit * hinge_price(lambda * s(k), lambda);
  }
  return (value - payment) / (2.0 * d);
}

}  // namespace aggpriv::market
