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

#include "aggpriv/dp/sparse_vector.h"
#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"
#include "aggpriv/lp/structured_minimax.h"

namespace aggpriv {
namespace {

FeasibilityLP stage2_lp_rows(const AggregativeGame& game,
                             const PreslParams& params,
                             const Eigen::VectorXd& s_hat, double y_hat,
                             int first, int count) {
  const double slack = params.alpha + 2.0 * params.E1;
  FeasibilityLP lp;
  lp.n = count;
  lp.m = game.m();
  lp.gamma = game.gamma();
  for (int k = 0; k < game.d(); ++k) {
    const Eigen::MatrixXd F = game.influence(k).middleRows(first, count);
    lp.constraints.push_back({F, s_hat(k) + slack});
    lp.constraints.push_back({-F, -s_hat(k) + slack});
  }
  lp.constraints.push_back(
      {game.loss().middleRows(first, count), y_hat + slack});
  lp.supports.resize(count);
  for (int i = 0; i < count; ++i) {
    lp.supports[i] = abr_set(game, first + i, s_hat, params.xi);
  }
  return lp;
}

}  // namespace

FeasibilityLP presl_stage2_lp(const AggregativeGame& game,
                              const PreslParams& params,
                              const Eigen::VectorXd& s_hat, double y_hat) {
  return stage2_lp_rows(game, params, s_hat, y_hat, 0, game.n());
}

PreslResult presl(const AggregativeGame& game, const PreslConfig& config,
                  NoiseSource& src) {
  PreslResult res;
  res.params = make_presl_params(game, config);
  const PreslParams& p = res.params;
  const QueryGrid grid(p);
  const double threshold = p.alpha + p.E1;
  SparseSession sparse(p.gamma, threshold, 1, config.epsilon, src);

  std::vector<std::vector<std::vector<int>>> supports(grid.x_size());
  std::vector<bool> cached(grid.x_size(), false);
  for (long long q = 0; q < grid.size(); ++q) {
    const long long xi = grid.x_index(q);
    const Eigen::VectorXd s_hat = grid.s_hat(xi);
    const double y_hat = grid.y_hat(grid.y_index(q));
    if (!cached[xi]) {
      supports[xi] = abr_supports(game, s_hat, p.xi);
      cached[xi] = true;
    }
    const LpMinResult lpm =
        exact_lp_min(game, s_hat, y_hat, supports[xi], p.lp_tolerance);
    const SparseAnswer ans = sparse.answer(lpm.value);
    if (ans.below()) {
      res.transcript.hit = q;
      res.transcript.noisy_answer = ans.value;
      res.transcript.s_hat = s_hat;
      res.transcript.y_hat = y_hat;
      res.hit_value = lpm.value;
      res.near_threshold = lpm.value > threshold - p.E1;
      break;
    }
  }
  res.transcript.queries_answered =
      static_cast<long long>(sparse.queries_answered());
  if (!res.transcript.hit) {
    res.status = RunStatus::kAbort;
    return res;
  }

  const FeasibilityLP lp =
      presl_stage2_lp(game, p, res.transcript.s_hat, res.transcript.y_hat);
  DistMWParams mw;
  mw.epsilon = config.epsilon;
  mw.delta = config.delta;
  mw.alpha = p.E2 > 0.0 ? p.E2 : p.alpha;
  mw.beta = config.beta / 3.0;
  mw.threads = config.threads;
  const DistMWResult dm = distmw_solve(lp, mw, src);
  res.transcript.distmw = dm.transcript;
  res.transcript.eta = dm.schedule.eta;
  res.p_bar = dm.p_bar;
  res.stage2_violation = max_violation(lp, dm.p_bar);
  res.transcript.rounding_seed = src.next_u64();
  res.profile = sample_profile(game, res.p_bar, res.transcript.rounding_seed);
  res.status = RunStatus::kOk;
  return res;
}

int presl_replay_player(const AggregativeGame& game, const PreslParams& params,
                        const PreslTranscript& transcript, int i) {
  if (!transcript.hit) throw StateError("presl replay: run aborted");
  // A one-player LP holding only player i's rows and support.
  const FeasibilityLP own = stage2_lp_rows(game, params, transcript.s_hat,
                                           transcript.y_hat, i, 1);
  const Eigen::RowVectorXd row =
      replay_player(own, 0, transcript.distmw, transcript.eta);
  return sample_player(row, transcript.rounding_seed, i);
}

}  // namespace aggpriv
