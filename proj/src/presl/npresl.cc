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

#include "aggpriv/presl/presl.h"

#include <cmath>

#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"
#include "aggpriv/lp/structured_minimax.h"

namespace aggpriv {

double npresl_concentration(int n, int d, double gamma, double beta) {
  return std::sqrt(n * gamma * gamma / 2.0 * std::log((2.0 * d + 2.0) / beta));
}

NpreslResult npresl(const AggregativeGame& game, const NpreslConfig& config,
                    NoiseSource& src) {
  if (!(config.alpha > 0.0)) throw ParameterError("npresl: alpha <= 0");
  if (!(config.beta > 0.0 && config.beta < 1.0)) {
    throw ParameterError("npresl: beta must lie in (0, 1)");
  }
  const double alpha = config.alpha;
  const long long axis = grid_axis_points(game.W(), alpha);
  const double x_size = std::pow(static_cast<double>(axis), game.d());
  if (x_size > config.grid_budget) {
    throw BudgetError("npresl: grid exceeds the budget");
  }
  const QueryGrid grid(game.d(), game.W(), alpha, axis, 1);
  NpreslResult res;
  res.xi = config.zeta + game.gamma() + 2.0 * alpha;
  res.E = npresl_concentration(game.n(), game.d(), game.gamma(), config.beta);
  const double tol = alpha / 100.0;
  const double y_max = game.n() * game.gamma();
  bool found = false;
  for (long long xi = 0; xi < grid.x_size(); ++xi) {
    const Eigen::VectorXd s_hat = grid.s_hat(xi);
    const auto R = abr_supports(game, s_hat, res.xi);
    LpMinResult best = exact_lp_min(game, s_hat, kNoObjective, R, tol);
    if (best.value > alpha) continue;
    ++res.feasible_points;
    // Smallest y with Q(s_hat, y - alpha) <= alpha, i.e. some p with
    // |S(p) - s_hat| <= alpha and L(p) <= y.
    double lo = 0.0;
    double hi = y_max;
    const LpMinResult at_lo = exact_lp_min(game, s_hat, lo - alpha, R, tol);
    if (at_lo.value <= alpha) {
      best = at_lo;
      hi = lo;
    }
    while (hi - lo > alpha / 10.0) {
      const double mid = 0.5 * (lo + hi);
      const LpMinResult probe = exact_lp_min(game, s_hat, mid - alpha, R, tol);
      if (probe.value <= alpha) {
        hi = mid;
        best = probe;
      } else {
        lo = mid;
      }
    }
    const double objective = game.gamma() * game.loss().cwiseProduct(best.witness).sum();
    if (!found || objective < res.objective) {
      found = true;
      res.objective = objective;
      res.p = best.witness;
      res.s_hat = s_hat;
    }
  }
  if (!found) {
    throw InternalError(
        "npresl: no grid point admits a feasible LP; alpha is below the "
        "existence slack");
  }
  res.rounding_seed = src.next_u64();
  res.profile = sample_profile(game, res.p, res.rounding_seed);
  return res;
}

}  // namespace aggpriv
