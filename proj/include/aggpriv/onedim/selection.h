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

#include <vector>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/onedim/psummnash.h"
#include "aggpriv/onedim/quasi_game.h"

namespace aggpriv {

struct SelectionConfig {
  double zeta = 0.0;
  double epsilon = 1.0;
  // Zero selects the precondition bound.
  double alpha = 0.0;
  double beta = 0.05;
};

struct SelectionParams {
  SelectionConfig config;
  double alpha = 0.0;
  double xi = 0.0;  // 2 alpha + gamma + zeta
  double W = 0.0;   // snapped to a multiple of alpha
  long long K = 0;
  // Z sorted by quality descending, ties by ascending s.
  std::vector<double> ordered;
};

SelectionParams make_selection_params(const QuasiAggregativeGame& game,
                                      const QualityFn& quality,
                                      const SelectionConfig& config);

struct SelectionResult {
  RunStatus status = RunStatus::kAbort;
  SelectionParams params;
  PureProfile profile;
  OneDimTranscript transcript;
  long long position = -1;  // rank of the associated s in the quality order
  double quality = 0.0;     // q(S(profile))
  double regret_bound = 0.0;   // 10 alpha + 3 gamma_eff + zeta
  double quality_slack = 0.0;  // 5 alpha lambda
};

SelectionResult select_equilibrium(const QuasiAggregativeGame& game,
                                   const QualityFn& quality,
                                   const SelectionConfig& config,
                                   NoiseSource& src);

int selection_replay_player(const QuasiAggregativeGame& game,
                            const OneDimTranscript& transcript, int i);

}  // namespace aggpriv
