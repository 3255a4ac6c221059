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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"
#include "aggpriv/harness/brute_force.h"
#include "aggpriv/harness/generators.h"
#include "aggpriv/presl/presl.h"
#include "test_games.h"

namespace aggpriv {
namespace {

TEST(Npresl, ConstantGame) {
  const AggregativeGame g = testing::constant_game(5, 2, 1, 0.2);
  NpreslConfig c;
  c.alpha = 0.2;
  NoiseSource src(1);
  const NpreslResult r = npresl(g, c, src);
  EXPECT_EQ(r.objective, 0.0);
  EXPECT_LE(regret(g, r.profile).max, 4 * c.alpha + 2 * g.gamma_eff() + 2 * r.E);
}

TEST(Npresl, LossAgainstBruteForce) {
  for (int t = 0; t < 20; ++t) {
    const int n = 4 + t % 3;
    const AggregativeGame g = generate_linear(n, 2, 1, 1000 + t);
    const double zeta = 0.15;
    const auto opt = brute_force_opt_loss(g, zeta);
    if (!opt) continue;
    NpreslConfig c;
    c.zeta = zeta;
    c.alpha = g.gamma();
    NoiseSource src(t);
    const NpreslResult r = npresl(g, c, src);
    EXPECT_LE(r.objective, *opt + c.alpha / 10 + 1e-9);
    EXPECT_LE(profile_loss(g, r.profile), *opt + r.E + 5 * c.alpha + 1e-9);
    EXPECT_LE(regret(g, r.profile).max,
              zeta + 4 * c.alpha + 2 * g.gamma_eff() + 2 * r.E + 1e-9);
  }
}

TEST(Npresl, MonotoneInZeta) {
  const AggregativeGame g = generate_linear(6, 2, 1, 44);
  double last = 1e300;
  for (double zeta : {0.0, 0.1, 0.2, 0.4, 0.8}) {
    NpreslConfig c;
    c.zeta = zeta;
    c.alpha = g.gamma();
    NoiseSource src(3);
    const double obj = npresl(g, c, src).objective;
    EXPECT_LE(obj, last + 1e-9);
    last = obj;
  }
}

TEST(Npresl, Validation) {
  const AggregativeGame g = generate_linear(3, 2, 1, 1);
  NpreslConfig c;
  c.alpha = 0.0;
  NoiseSource src(1);
  EXPECT_THROW(npresl(g, c, src), ParameterError);
  c.alpha = 1e-7;
  c.grid_budget = 1e3;
  EXPECT_THROW(npresl(g, c, src), BudgetError);
}

}  // namespace
}  // namespace aggpriv
