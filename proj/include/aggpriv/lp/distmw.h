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
#include "aggpriv/lp/feasibility_lp.h"

namespace aggpriv {

struct DistMWParams {
  double epsilon = 1.0;
  double delta = 1e-3;
  double alpha = 0.1;
  double beta = 0.05;
  int threads = 1;
  // Refuse runs whose T * n * m exceeds this.
  double work_budget = 4e9;
};

struct DistMWSchedule {
  long long rounds = 1;   // T = ceil(16 n^2 gamma^2 ln m / alpha^2), >= 1
  double epsilon0 = 0.0;  // eps / (2 sqrt(2 T ln(1/delta)))
  double eta = 0.0;       // alpha / (4 n gamma)
};

DistMWSchedule distmw_schedule(const FeasibilityLP& lp,
                               const DistMWParams& params);

// 100 * (n gamma^2 / eps * ln(k/beta) * ln n * sqrt(ln m * ln(1/delta)))^(1/2)
// for k cross constraints.
double distmw_target_alpha(int n, double gamma, double epsilon,
                           std::size_t num_constraints, double beta, int m,
                           double delta);

struct DistMWResult {
  MixedProfile p_bar;
  // Index of the constraint broadcast in every round.
  std::vector<int> transcript;
  DistMWSchedule schedule;
  // Per player: (1/T) sum_t <f_i^t, p_i^t> - min_{j in R_i} (1/T) sum_t f_ij^t.
  Eigen::VectorXd average_regret;
  // eta + ln(m) / (T eta).
  double regret_bound = 0.0;
};

// Runs all T rounds and returns the average iterate. Infeasibility is not
// detected; callers verify the result.
DistMWResult distmw_solve(const FeasibilityLP& lp, const DistMWParams& params,
                          NoiseSource& src);

// Recomputes player i's average iterate from the broadcast transcript and
// the player's own rows and support.
Eigen::RowVectorXd replay_player(const FeasibilityLP& lp, int i,
                                 const std::vector<int>& transcript,
                                 double eta);

}  // namespace aggpriv
