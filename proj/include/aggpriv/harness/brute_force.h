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

#include <optional>
#include <vector>

#include "aggpriv/game/aggregative_game.h"
#include "aggpriv/onedim/quasi_game.h"

namespace aggpriv {

struct ProfileRegret {
  PureProfile profile;
  double regret = 0.0;
};

inline constexpr double kBruteForceBudget = 1e6;

// Every profile with its exact regret, in lexicographic order (player 0
// most significant). Throws BudgetError when m^n exceeds the budget.
std::vector<ProfileRegret> enumerate_profiles(const AggregativeGame& game,
                                              double budget = kBruteForceBudget);
std::vector<ProfileRegret> enumerate_profiles(const QuasiAggregativeGame& game,
                                              double budget = kBruteForceBudget);

// Profiles whose regret is at most zeta (+1e-12).
std::vector<ProfileRegret> brute_force_equilibria(
    const AggregativeGame& game, double zeta, double budget = kBruteForceBudget);
std::vector<ProfileRegret> brute_force_equilibria(
    const QuasiAggregativeGame& game, double zeta,
    double budget = kBruteForceBudget);

// min L over zeta-equilibria; empty when none exists.
std::optional<double> brute_force_opt_loss(const AggregativeGame& game,
                                           double zeta);

// max q(S(x)) over zeta-equilibria; empty when none exists.
std::optional<double> brute_force_opt_quality(const QuasiAggregativeGame& game,
                                              const QualityFn& quality,
                                              double zeta);

}  // namespace aggpriv
