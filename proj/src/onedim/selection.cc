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

#include "aggpriv/onedim/selection.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aggpriv/dp/sparse_vector.h"
#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"

namespace aggpriv {
namespace {

int extreme_action(const QuasiAggregativeGame& game, int i, double s,
                   double xi, bool optimistic) {
  const std::vector<int> set =
      abr_set(game.base(), i, Eigen::VectorXd::Constant(1, s), xi);
  std::vector<bool> in(game.m(), false);
  for (int a : set) in[a] = true;
  const auto& order = game.order()[i];
  int pick = -1;
  for (int a : order) {
    if (!in[a]) continue;
    if (optimistic) return a;
    pick = a;
  }
  return pick;
}

}  // namespace

SelectionParams make_selection_params(const QuasiAggregativeGame& game,
                                      const QualityFn& quality,
                                      const SelectionConfig& config) {
  if (!game.has_order()) {
    throw ParameterError("selection: the game declares no action order");
  }
  if (!(config.epsilon > 0.0)) throw ParameterError("selection: epsilon <= 0");
  if (!(config.beta > 0.0 && config.beta < 1.0)) {
    throw ParameterError("selection: beta must lie in (0, 1)");
  }
  if (config.zeta < 4.0 * game.gamma() * (1.0 - 1e-12)) {
    throw ParameterError("selection: zeta must be at least 4 gamma");
  }
  const double need = onedim_alpha_bound(game.gamma(), game.W(), game.n(),
                                         config.beta, config.epsilon, 8.0);
  SelectionParams p;
  p.config = config;
  p.alpha = config.alpha > 0.0 ? config.alpha : need;
  if (p.alpha < need * (1.0 - 1e-12)) {
    throw ParameterError("selection: alpha below the precondition bound");
  }
  p.xi = 2.0 * p.alpha + game.gamma() + config.zeta;
  p.K = std::max<long long>(
      1, static_cast<long long>(std::ceil(game.W() / p.alpha - 1e-9)));
  p.W = static_cast<double>(p.K) * p.alpha;
  std::vector<double> z;
  for (long long k = -p.K; k <= p.K - 1; ++k) z.push_back(k * p.alpha);
  std::vector<double> qz(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) qz[i] = quality(z[i]);
  std::vector<std::size_t> idx(z.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return qz[a] > qz[b]; });
  for (std::size_t i : idx) p.ordered.push_back(z[i]);
  return p;
}

SelectionResult select_equilibrium(const QuasiAggregativeGame& game,
                                   const QualityFn& quality,
                                   const SelectionConfig& config,
                                   NoiseSource& src) {
  SelectionResult res;
  res.params = make_selection_params(game, quality, config);
  const SelectionParams& p = res.params;
  const double a = p.alpha;
  const double gamma = game.gamma();
  const double eps4 = config.epsilon / 4.0;
  res.regret_bound = 10.0 * a + 3.0 * game.gamma_eff() + config.zeta;
  res.quality_slack = 5.0 * a * quality.lipschitz;
  res.transcript.alpha = a;
  res.transcript.xi = p.xi;

  const auto L = static_cast<long long>(p.ordered.size());
  std::vector<Extremes> ext;
  ext.reserve(L);
  for (double s : p.ordered) ext.push_back(s_extremes(game, s, p.xi));

  long long current = -1;
  auto run = [&](double threshold, auto&& query) {
    SparseSession session(gamma, threshold, 1, eps4, src);
    long long hit = -1;
    for (long long k = 0; k < L; ++k) {
      if (session.answer(query(k)).below()) {
        hit = k;
        break;
      }
    }
    res.transcript.queries.push_back(
        static_cast<long long>(session.queries_answered()));
    return hit;
  };

  const long long hit_max = run(3.0 * a, [&](long long k) {
    return std::abs(ext[k].s_max - p.ordered[k]);
  });
  if (hit_max >= 0) {
    current = hit_max;
    res.profile = ext[hit_max].x_max;
    res.transcript.branch = OneDimBranch::kMax;
  }
  const long long hit_min = run(3.0 * a, [&](long long k) {
    return std::abs(ext[k].s_min - p.ordered[k]);
  });
  if (hit_min >= 0 && (current < 0 || hit_min < current)) {
    current = hit_min;
    res.profile = ext[hit_min].x_min;
    res.transcript.branch = OneDimBranch::kMin;
  }
  const long long hit_mid = run(-3.0 * a, [&](long long k) {
    const double s = p.ordered[k];
    return std::max(std::min(ext[k].s_min - s, 0.0), -2.0 * a) +
           std::max(std::min(s - ext[k].s_max, 0.0), -2.0 * a);
  });
  if (hit_mid >= 0) {
    const double s = p.ordered[hit_mid];
    const auto walk = smooth_walk(ext[hit_mid].x_max, ext[hit_mid].x_min);
    SparseSession session(gamma, a + gamma / 2.0, 1, eps4, src);
    int step = -1;
    for (std::size_t j = 0; j < walk.size(); ++j) {
      if (session.answer(std::abs(game.aggregate(walk[j]) - s)).below()) {
        step = static_cast<int>(j);
        break;
      }
    }
    res.transcript.queries.push_back(
        static_cast<long long>(session.queries_answered()));
    if (step >= 0 && (current < 0 || hit_mid < current)) {
      current = hit_mid;
      res.profile = walk[step];
      res.transcript.branch = OneDimBranch::kWalk;
      res.transcript.walk_step = step;
    }
  }
  if (current < 0) return res;
  res.position = current;
  res.transcript.s = p.ordered[current];
  res.quality = quality(game.aggregate(res.profile));
  res.status = RunStatus::kOk;
  return res;
}

int selection_replay_player(const QuasiAggregativeGame& game,
                            const OneDimTranscript& t, int i) {
  switch (t.branch) {
    case OneDimBranch::kMax:
      return extreme_action(game, i, t.s, t.xi, true);
    case OneDimBranch::kMin:
      return extreme_action(game, i, t.s, t.xi, false);
    case OneDimBranch::kWalk:
      return extreme_action(game, i, t.s, t.xi, i < t.walk_step);
    default:
      throw StateError("selection replay: no output in transcript");
  }
}

}  // namespace aggpriv
