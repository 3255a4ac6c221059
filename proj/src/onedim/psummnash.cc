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

#include "aggpriv/onedim/psummnash.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aggpriv/dp/sparse_vector.h"
#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"

namespace aggpriv {

const char* branch_name(OneDimBranch b) {
  switch (b) {
    case OneDimBranch::kNone:
      return "none";
    case OneDimBranch::kFixedPoint:
      return "fixed_point";
    case OneDimBranch::kMax:
      return "max";
    case OneDimBranch::kMin:
      return "min";
    case OneDimBranch::kWalk:
      return "walk";
  }
  return "none";
}

double onedim_alpha_bound(double gamma, double W, int n, double beta,
                          double epsilon, double c) {
  return 100.0 * gamma * (std::log(2.0 * W * n) + std::log(c / beta)) / epsilon;
}

PsnResult psummnash(const QuasiAggregativeGame& game, const PsnConfig& config,
                    NoiseSource& src) {
  if (!(config.epsilon > 0.0)) throw ParameterError("psummnash: epsilon <= 0");
  if (!(config.beta > 0.0 && config.beta < 1.0)) {
    throw ParameterError("psummnash: beta must lie in (0, 1)");
  }
  const double gamma = game.gamma();
  const double need = onedim_alpha_bound(gamma, game.W(), game.n(),
                                         config.beta, config.epsilon, 6.0);
  PsnResult res;
  res.alpha = config.alpha > 0.0 ? config.alpha : need;
  if (res.alpha < need * (1.0 - 1e-12)) {
    throw ParameterError("psummnash: alpha below the precondition bound");
  }
  const double a = res.alpha;
  res.K = std::max<long long>(1, static_cast<long long>(
                                     std::ceil(game.W() / a - 1e-9)));
  res.W = static_cast<double>(res.K) * a;
  res.bound = 10.0 * a + 2.0 * game.gamma_eff();
  res.transcript.alpha = a;
  const double eps3 = config.epsilon / 3.0;
  const long long K = res.K;

  std::vector<double> v(2 * K + 1);  // v[k + K] = V(k alpha)
  for (long long k = -K; k <= K; ++k) v[k + K] = V(game, k * a);
  auto Vk = [&](long long k) { return v[k + K]; };

  SparseSession first(gamma, 4.0 * a, 1, eps3, src);
  for (long long k = -K; k <= K - 1; ++k) {
    if (first.answer(std::abs(Vk(k) - k * a)).below()) {
      res.transcript.branch = OneDimBranch::kFixedPoint;
      res.transcript.s = k * a;
      break;
    }
  }
  res.transcript.queries.push_back(
      static_cast<long long>(first.queries_answered()));
  if (res.transcript.branch == OneDimBranch::kFixedPoint) {
    res.profile = ba_profile(game, res.transcript.s);
    res.status = RunStatus::kOk;
    return res;
  }

  auto q2 = [&](long long k) {
    return std::max(std::min(0.0, k * a - Vk(k - 1)), -2.0 * a) +
           std::max(std::min(0.0, Vk(k) - k * a), -3.0 * a);
  };
  for (long long k = -K + 1; k <= K - 1; ++k) {
    if (std::abs(q2(k) + 5.0 * a) <= 1e-12 * std::max(1.0, a)) {
      res.bracket_found = true;
    }
  }
  SparseSession second(gamma, -4.0 * a, 1, eps3, src);
  long long hit = std::numeric_limits<long long>::min();
  for (long long k = -K + 1; k <= K - 1; ++k) {
    if (second.answer(q2(k)).below()) {
      hit = k;
      break;
    }
  }
  res.transcript.queries.push_back(
      static_cast<long long>(second.queries_answered()));
  if (hit == std::numeric_limits<long long>::min()) return res;

  const double s = hit * a;
  const double s_prev = (hit - 1) * a;
  res.transcript.s = s;
  res.transcript.s_prev = s_prev;
  const auto walk = smooth_walk(ba_profile(game, s), ba_profile(game, s_prev));
  SparseSession third(gamma, a + gamma / 2.0, 1, eps3, src);
  res.walk_gap = std::numeric_limits<double>::infinity();
  int step = -1;
  for (std::size_t j = 0; j < walk.size(); ++j) {
    const double gap = std::abs(game.aggregate(walk[j]) - s);
    res.walk_gap = std::min(res.walk_gap, gap);
    if (step < 0 && !third.halted() && third.answer(gap).below()) {
      step = static_cast<int>(j);
    }
  }
  res.transcript.queries.push_back(
      static_cast<long long>(third.queries_answered()));
  if (step < 0) return res;
  res.transcript.branch = OneDimBranch::kWalk;
  res.transcript.walk_step = step;
  res.profile = walk[step];
  res.status = RunStatus::kOk;
  return res;
}

int psummnash_replay_player(const QuasiAggregativeGame& game,
                            const OneDimTranscript& t, int i) {
  const AggregativeGame& g = game.base();
  const auto at = [&](double s) {
    return abr_action(g, i, Eigen::VectorXd::Constant(1, s));
  };
  switch (t.branch) {
    case OneDimBranch::kFixedPoint:
      return at(t.s);
    case OneDimBranch::kWalk:
      return i < t.walk_step ? at(t.s) : at(t.s_prev);
    default:
      throw StateError("psummnash replay: no output in transcript");
  }
}

}  // namespace aggpriv
