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

#include "aggpriv/lp/distmw.h"

#include <algorithm>
#include <barrier>
#include <cmath>
#include <limits>
#include <thread>

#include "aggpriv/errors.h"
#include "aggpriv/lp/mw.h"

namespace aggpriv {
namespace {

// One player's MW state over the T rounds.
struct PlayerState {
  Eigen::VectorXd p;
  Eigen::VectorXd sum;
  Eigen::VectorXd cumulative_loss;
  double realized_loss = 0.0;
};

PlayerState init_player(const FeasibilityLP& lp, int i) {
  PlayerState st;
  st.p = Eigen::VectorXd::Zero(lp.m);
  const double w = 1.0 / static_cast<double>(lp.supports[i].size());
  for (int j : lp.supports[i]) st.p(j) = w;
  st.sum = Eigen::VectorXd::Zero(lp.m);
  st.cumulative_loss = Eigen::VectorXd::Zero(lp.m);
  return st;
}

void step_player(const FeasibilityLP& lp, int i, int c, double eta,
                 PlayerState& st) {
  const Eigen::VectorXd loss = lp.constraints[c].f.row(i).transpose();
  st.realized_loss += loss.dot(st.p);
  st.cumulative_loss += loss;
  st.p = kl_project<double>(mw_update<double>(st.p, loss, eta),
                            lp.supports[i]);
}

void check_params(const DistMWParams& params) {
  if (!(params.epsilon > 0.0)) throw ParameterError("distmw: epsilon <= 0");
  if (!(params.delta > 0.0 && params.delta < 1.0)) {
    throw ParameterError("distmw: delta must lie in (0, 1)");
  }
  if (!(params.alpha > 0.0)) throw ParameterError("distmw: alpha <= 0");
  if (!(params.beta > 0.0 && params.beta < 1.0)) {
    throw ParameterError("distmw: beta must lie in (0, 1)");
  }
}

}  // namespace

DistMWSchedule distmw_schedule(const FeasibilityLP& lp,
                               const DistMWParams& params) {
  check_params(params);
  DistMWSchedule s;
  const double n = lp.n;
  const double raw = 16.0 * n * n * lp.gamma * lp.gamma *
                     std::log(static_cast<double>(lp.m)) /
                     (params.alpha * params.alpha);
  s.rounds = std::max<long long>(1, static_cast<long long>(std::ceil(raw)));
  s.epsilon0 =
      params.epsilon /
      (2.0 * std::sqrt(2.0 * static_cast<double>(s.rounds) *
                       std::log(1.0 / params.delta)));
  s.eta = params.alpha / (4.0 * n * lp.gamma);
  return s;
}

double distmw_target_alpha(int n, double gamma, double epsilon,
                           std::size_t num_constraints, double beta, int m,
                           double delta) {
  if (n < 1 || m < 1 || num_constraints < 1 || !(epsilon > 0.0) ||
      !(beta > 0.0) || !(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("distmw_target_alpha: invalid arguments");
  }
  const double inner =
      n * gamma * gamma / epsilon *
      std::log(static_cast<double>(num_constraints) / beta) * std::log(n) *
      std::sqrt(std::log(static_cast<double>(m)) * std::log(1.0 / delta));
  return 100.0 * std::sqrt(std::max(0.0, inner));
}

DistMWResult distmw_solve(const FeasibilityLP& lp, const DistMWParams& params,
                          NoiseSource& src) {
  lp.validate();
  if (lp.constraints.empty()) throw ParameterError("distmw: no constraints");
  DistMWResult res;
  res.schedule = distmw_schedule(lp, params);
  const long long T = res.schedule.rounds;
  if (static_cast<double>(T) * lp.n * lp.m > params.work_budget) {
    throw BudgetError("distmw: T * n * m exceeds the work budget");
  }
  const double eta = res.schedule.eta;
  const double eps0 = res.schedule.epsilon0;
  res.transcript.resize(static_cast<std::size_t>(T));

  std::vector<PlayerState> players;
  players.reserve(lp.n);
  for (int i = 0; i < lp.n; ++i) players.push_back(init_player(lp, i));
  MixedProfile P(lp.n, lp.m);
  auto gather = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      P.row(i) = players[i].p.transpose();
      players[i].sum += players[i].p;
    }
  };
  auto update = [&](int lo, int hi, int c) {
    for (int i = lo; i < hi; ++i) step_player(lp, i, c, eta, players[i]);
  };
  auto select = [&]() {
    return static_cast<int>(
        most_violated(lp, P, SelectMode::kExponential, eps0, &src));
  };

  const int threads = std::clamp(params.threads, 1, lp.n);
  if (threads == 1) {
    for (long long t = 0; t < T; ++t) {
      gather(0, lp.n);
      const int c = select();
      res.transcript[t] = c;
      update(0, lp.n, c);
    }
  } else {
    long long t = 0;
    int current = 0;
    std::barrier sync(threads, [&]() noexcept {});
    std::barrier pick(threads, [&]() noexcept {
      current = select();
      res.transcript[t] = current;
    });
    std::vector<std::jthread> pool;
    auto worker = [&](int w) {
      const int lo = static_cast<int>(static_cast<long long>(lp.n) * w / threads);
      const int hi =
          static_cast<int>(static_cast<long long>(lp.n) * (w + 1) / threads);
      for (long long r = 0; r < T; ++r) {
        gather(lo, hi);
        pick.arrive_and_wait();
        update(lo, hi, current);
        if (w == 0) ++t;
        sync.arrive_and_wait();
      }
    };
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }

  res.p_bar.resize(lp.n, lp.m);
  res.average_regret.resize(lp.n);
  const double Td = static_cast<double>(T);
  for (int i = 0; i < lp.n; ++i) {
    res.p_bar.row(i) = (players[i].sum / Td).transpose();
    double best = std::numeric_limits<double>::infinity();
    for (int j : lp.supports[i]) {
      best = std::min(best, players[i].cumulative_loss(j));
    }
    res.average_regret(i) = (players[i].realized_loss - best) / Td;
  }
  res.regret_bound = eta + std::log(static_cast<double>(lp.m)) / (Td * eta);
  return res;
}

Eigen::RowVectorXd replay_player(const FeasibilityLP& lp, int i,
                                 const std::vector<int>& transcript,
                                 double eta) {
  if (i < 0 || i >= lp.n) throw ParameterError("replay_player: bad player");
  if (transcript.empty()) throw ParameterError("replay_player: empty transcript");
  PlayerState st = init_player(lp, i);
  for (int c : transcript) {
    if (c < 0 || c >= static_cast<int>(lp.constraints.size())) {
      throw ParameterError("replay_player: transcript index out of range");
    }
    st.sum += st.p;
    step_player(lp, i, c, eta, st);
  }
  return (st.sum / static_cast<double>(transcript.size())).transpose();
}

}  // namespace aggpriv
