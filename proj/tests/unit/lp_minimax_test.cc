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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"
#include "aggpriv/harness/generators.h"
#include "aggpriv/lp/structured_minimax.h"
#include "test_games.h"

namespace aggpriv {
namespace {

// max(max_k |gamma <f^k, p> - s_k|, gamma <l, p> - y) at a mixed profile.
double lp_objective(const AggregativeGame& g, const Eigen::VectorXd& s_hat,
                    double y_hat, const MixedProfile& p) {
  const Eigen::VectorXd s = expected_aggregator(g, p);
  double v = (s - s_hat).cwiseAbs().maxCoeff();
  if (std::isfinite(y_hat)) v = std::max(v, expected_loss(g, p) - y_hat);
  return v;
}

std::vector<std::vector<int>> full_supports(int n, int m) {
  std::vector<int> all(m);
  for (int j = 0; j < m; ++j) all[j] = j;
  return std::vector<std::vector<int>>(n, all);
}

TEST(ExactLpMin, WitnessFeasibility) {
  const AggregativeGame g = generate_linear(6, 3, 2, 31);
  NoiseSource src(2);
  MixedProfile p(6, 3);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 3; ++j) p(i, j) = src.uniform();
    p.row(i) /= p.row(i).sum();
  }
  const LpMinResult r = exact_lp_min(g, expected_aggregator(g, p),
                                     expected_loss(g, p), full_supports(6, 3), 1e-6);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.value, 1e-6);
}

TEST(ExactLpMin, OnePlayerSegmentMatchesGrid) {
  for (int t = 0; t < 20; ++t) {
    const AggregativeGame g = generate_linear(1, 2, 1, 40 + t);
    NoiseSource src(t);
    Eigen::VectorXd s_hat(1);
    s_hat << g.gamma() * src.uniform();
    const double y_hat = g.gamma() * src.uniform() * 0.5;
    double grid = 1e300;
    for (int q = 0; q <= 10000; ++q) {
      MixedProfile p(1, 2);
      p << 1 - q / 1e4, q / 1e4;
      grid = std::min(grid, lp_objective(g, s_hat, y_hat, p));
    }
    const LpMinResult r = exact_lp_min(g, s_hat, y_hat, full_supports(1, 2), 1e-7);
    EXPECT_NEAR(r.value, grid, 2e-4 * g.gamma() + 1e-7);
  }
}

TEST(ExactLpMin, SandwichAgainstGrid) {
  // n = 2, m = 3, d = 2: grid over both simplices at step h.
  const int steps = 40;
  for (int t = 0; t < 5; ++t) {
    const AggregativeGame g = generate_linear(2, 3, 2, 70 + t);
    NoiseSource src(t);
    Eigen::VectorXd s_hat(2);
    s_hat << src.uniform() * 0.8, src.uniform() * 0.8;
    const double y_hat = 0.3 * src.uniform();
    const double tol = 1e-6;
    const LpMinResult r = exact_lp_min(g, s_hat, y_hat, full_supports(2, 3), tol);
    double grid = 1e300;
    MixedProfile p(2, 3);
    for (int a = 0; a <= steps; ++a) {
      for (int b = 0; a + b <= steps; ++b) {
        for (int c = 0; c <= steps; ++c) {
          for (int e = 0; c + e <= steps; ++e) {
            p << a, b, steps - a - b, c, e, steps - c - e;
            grid = std::min(grid, lp_objective(g, s_hat, y_hat, p / steps));
          }
        }
      }
    }
    // Each piece moves by at most gamma * 2 per unit of l1 mass per player.
    const double grid_error = 2 * g.gamma() * 2 * (2.0 / steps);
    EXPECT_LE(r.value, grid + tol);
    EXPECT_GE(r.value, grid - grid_error - tol);
    EXPECT_LE(r.value, lp_objective(g, s_hat, y_hat, r.witness) + 1e-12);
    EXPECT_LE(lp_objective(g, s_hat, y_hat, r.witness), r.value + tol + 1e-12);
  }
}

TEST(ExactLpMin, MonotoneInObjectiveLevel) {
  const AggregativeGame g = generate_linear(8, 2, 1, 5);
  const Eigen::VectorXd s_hat = Eigen::VectorXd::Constant(1, 0.4);
  double last = 1e300;
  for (double y = 0.0; y <= 1.0; y += 0.05) {
    const double v = exact_lp_min(g, s_hat, y, full_supports(8, 2), 1e-7).value;
    EXPECT_LE(v, last + 1e-7);
    last = v;
  }
  const double free = exact_lp_min(g, s_hat, kNoObjective, full_supports(8, 2), 1e-7).value;
  EXPECT_LE(free, last + 1e-7);
}

TEST(ExactLpMin, RespectsSupports) {
  const AggregativeGame g = generate_linear(5, 3, 1, 9);
  std::vector<std::vector<int>> R{{0}, {1, 2}, {2}, {0, 1}, {0, 1, 2}};
  const LpMinResult r = exact_lp_min(g, Eigen::VectorXd::Constant(1, 0.5), kNoObjective,
                                     R, 1e-7);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (std::find(R[i].begin(), R[i].end(), j) == R[i].end()) {
        EXPECT_EQ(r.witness(i, j), 0.0);
      }
    }
    EXPECT_NEAR(r.witness.row(i).sum(), 1.0, 1e-9);
  }
}

TEST(ExactLpMin, LargerInstanceConverges) {
  const AggregativeGame g = generate_linear(200, 2, 1, 11);
  const Eigen::VectorXd s_hat = Eigen::VectorXd::Constant(1, 0.5);
  const LpMinResult r = exact_lp_min(g, s_hat, 0.3, 0.2, 1e-4);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(lp_objective(g, s_hat, 0.3, r.witness), r.value + 1e-4 + 1e-12);
}

TEST(ExactLpMin, ToleranceMustBePositive) {
  const AggregativeGame g = generate_linear(2, 2, 1, 1);
  EXPECT_THROW(exact_lp_min(g, Eigen::VectorXd::Zero(1), 0.0, full_supports(2, 2), 0.0),
               ParameterError);
}

TEST(AbrSupports, MatchesAbrSets) {
  const AggregativeGame g = generate_linear(4, 3, 1, 6);
  const Eigen::VectorXd s = Eigen::VectorXd::Constant(1, 0.3);
  const auto R = abr_supports(g, s, 0.1);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(R[i], abr_set(g, i, s, 0.1));
}

}  // namespace
}  // namespace aggpriv
