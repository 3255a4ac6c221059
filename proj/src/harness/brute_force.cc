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

#include "aggpriv/harness/brute_force.h"

#include <algorithm>
#include <cmath>

#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"

namespace aggpriv {
namespace {

template <typename Regret>
std::vector<ProfileRegret> enumerate(int n, int m, double budget,
                                     Regret&& regret_of) {
  if (std::pow(static_cast<double>(m), n) > budget) {
    throw BudgetError("brute force: m^n exceeds the enumeration budget");
  }
  std::vector<ProfileRegret> out;
  PureProfile x(n, 0);
  for (;;) {
    out.push_back({x, regret_of(x)});
    int i = n - 1;
    while (i >= 0 && x[i] == m - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

std::vector<ProfileRegret> filter(std::vector<ProfileRegret> all, double zeta) {
  std::erase_if(all, [&](const ProfileRegret& p) {
    return p.regret > zeta + 1e-12;
  });
  return all;
}

}  // namespace

std::vector<ProfileRegret> enumerate_profiles(const AggregativeGame& game,
                                              double budget) {
  return enumerate(game.n(), game.m(), budget, [&](const PureProfile& x) {
    return regret(game, x).max;
  });
}

std::vector<ProfileRegret> enumerate_profiles(const QuasiAggregativeGame& game,
                                              double budget) {
  return enumerate(game.n(), game.m(), budget, [&](const PureProfile& x) {
    return quasi_regret(game, x);
  });
}

std::vector<ProfileRegret> brute_force_equilibria(const AggregativeGame& game,
                                                  double zeta, double budget) {
  return filter(enumerate_profiles(game, budget), zeta);
}

std::vector<ProfileRegret> brute_force_equilibria(
    const QuasiAggregativeGame& game, double zeta, double budget) {
  return filter(enumerate_profiles(game, budget), zeta);
}

std::optional<double> brute_force_opt_loss(const AggregativeGame& game,
                                           double zeta) {
  std::optional<double> best;
  for (const auto& e : brute_force_equilibria(game, zeta)) {
    const double l = profile_loss(game, e.profile);
    if (!best || l < *best) best = l;
  }
  return best;
}

std::optional<double> brute_force_opt_quality(const QuasiAggregativeGame& game,
                                              const QualityFn& quality,
                                              double zeta) {
  std::optional<double> best;
  for (const auto& e : brute_force_equilibria(game, zeta)) {
    const double q = quality(game.aggregate(e.profile));
    if (!best || q > *best) best = q;
  }
  return best;
}

}  // namespace aggpriv
