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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/game/aggregative_game.h"
#include "aggpriv/lp/distmw.h"
#include "aggpriv/lp/feasibility_lp.h"
#include "aggpriv/presl/presl_params.h"

namespace aggpriv {

enum class RunStatus { kOk, kAbort };

// Everything a player needs, besides her own type, to recompute her action.
struct PreslTranscript {
  long long queries_answered = 0;
  std::optional<long long> hit;  // query index that fell below threshold
  double noisy_answer = 0.0;
  Eigen::VectorXd s_hat;
  double y_hat = 0.0;
  std::vector<int> distmw;  // broadcast constraint indices
  double eta = 0.0;
  std::uint64_t rounding_seed = 0;
};

struct PreslResult {
  RunStatus status = RunStatus::kAbort;
  PreslParams params;
  PreslTranscript transcript;
  PureProfile profile;
  MixedProfile p_bar;
  double hit_value = 0.0;       // exact LP value at the hit
  bool near_threshold = false;  // hit value within E1 of the threshold
  double stage2_violation = 0.0;
};

// Relaxed second-stage LP: two-sided aggregator constraints and the
// objective constraint, each with slack alpha + 2 E1, over xi-ABR supports.
FeasibilityLP presl_stage2_lp(const AggregativeGame& game,
                              const PreslParams& params,
                              const Eigen::VectorXd& s_hat, double y_hat);

PreslResult presl(const AggregativeGame& game, const PreslConfig& config,
                  NoiseSource& src);

// Player i's action from the transcript and her own type only.
int presl_replay_player(const AggregativeGame& game, const PreslParams& params,
                        const PreslTranscript& transcript, int i);

struct NpreslConfig {
  double zeta = 0.0;
  double alpha = 0.1;
  double beta = 0.05;
  double grid_budget = 1e7;
};

struct NpreslResult {
  PureProfile profile;
  MixedProfile p;
  Eigen::VectorXd s_hat;
  double objective = 0.0;  // L(p) of the selected LP solution
  double xi = 0.0;
  double E = 0.0;
  long long feasible_points = 0;
  std::uint64_t rounding_seed = 0;
};

// sqrt(n gamma^2 / 2 * ln((2d + 2) / beta)).
double npresl_concentration(int n, int d, double gamma, double beta);

// Throws InternalError when no grid point admits a feasible LP.
NpreslResult npresl(const AggregativeGame& game, const NpreslConfig& config,
                    NoiseSource& src);

}  // namespace aggpriv
