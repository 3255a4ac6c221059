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

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/game/aggregative_game.h"

namespace aggpriv {

Eigen::VectorXd aggregator(const AggregativeGame& game, const PureProfile& x);

Eigen::VectorXd expected_aggregator(const AggregativeGame& game,
                                    const MixedProfile& p);

// S(a, x_{-i}) given s = S(x).
Eigen::VectorXd deviated_aggregator(const AggregativeGame& game,
                                    const PureProfile& x,
                                    const Eigen::VectorXd& s, int i, int a);

// max_b u_i(b, s) - u_i(a, s).
double abr_regret(const AggregativeGame& game, int i, int a,
                  const Eigen::Ref<const Eigen::VectorXd>& s);

// Actions within eta of player i's best utility at s, ascending.
std::vector<int> abr_set(const AggregativeGame& game, int i,
                         const Eigen::Ref<const Eigen::VectorXd>& s,
                         double eta);

// Lowest-index maximizer of u_i(., s).
int abr_action(const AggregativeGame& game, int i,
               const Eigen::Ref<const Eigen::VectorXd>& s);

PureProfile abr_profile(const AggregativeGame& game,
                        const Eigen::Ref<const Eigen::VectorXd>& s);

struct RegretReport {
  Eigen::VectorXd per_player;
  double max = 0.0;
};

// eta_i = max_a u_i(a, S(a, x_{-i})) - u_i(x_i, S(x)).
RegretReport regret(const AggregativeGame& game, const PureProfile& x);

// Player i's best-response regret alone.
double player_regret(const AggregativeGame& game, const PureProfile& x,
                     const Eigen::VectorXd& s, int i);

// gamma * sum_i loss[i][x_i] and its expectation under p.
double profile_loss(const AggregativeGame& game, const PureProfile& x);
double expected_loss(const AggregativeGame& game, const MixedProfile& p);

MixedProfile point_mass(const AggregativeGame& game, const PureProfile& x);

// Player i's action drawn from `row` using a seed derived from
// (base_seed, i). Deterministic; used for replay.
int sample_player(const Eigen::Ref<const Eigen::RowVectorXd>& row,
                  std::uint64_t base_seed, int i);

// Independent rounding of every row of p; players draw from
// mix_seed(base_seed, i).
PureProfile sample_profile(const AggregativeGame& game, const MixedProfile& p,
                           std::uint64_t base_seed);

// Draws base_seed from src, then rounds as above.
PureProfile sample_profile(const AggregativeGame& game, const MixedProfile& p,
                           NoiseSource& src);

struct TranslationReport {
  Eigen::VectorXd br_regret;     // regret(x) per player
  Eigen::VectorXd abr_regret;    // ABR regret at S(x)
  Eigen::VectorXd shift_regret;  // ABR regret at the shifted aggregator
  double shift_distance = 0.0;   // ||S(x) - s'||_inf
  int br_to_abr_violations = 0;
  int abr_to_br_violations = 0;
  int shift_violations = 0;
  double max_slack = 0.0;  // largest violation amount (<= 0 when all hold)

  bool ok() const {
    return br_to_abr_violations == 0 && abr_to_br_violations == 0 &&
           shift_violations == 0;
  }
};

// Checks, per player and with gamma_eff:
//   abr_regret(S(x)) <= br_regret + gamma_eff,
//   br_regret <= abr_regret(S(x)) + gamma_eff,
//   abr_regret(s') <= abr_regret(S(x)) + 2 ||S(x) - s'||_inf.
TranslationReport translate_checks(const AggregativeGame& game,
                                   const PureProfile& x,
                                   const Eigen::VectorXd& shifted,
                                   double tol = 1e-9);

// Largest observed ||S(a, x_{-i}) - S(a', x_{-i})||_inf over random draws.
double sampled_influence(const AggregativeGame& game, NoiseSource& src,
                         int trials);

// Largest observed |u(a,s) - u(a,s')| / ||s - s'||_inf over random pairs in
// [-W, W]^d.
double sampled_lipschitz(const AggregativeGame& game, NoiseSource& src,
                         int trials);

PureProfile random_profile(const AggregativeGame& game, NoiseSource& src);

}  // namespace aggpriv
