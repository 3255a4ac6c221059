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
#include "aggpriv/onedim/quasi_game.h"
#include "aggpriv/presl/presl.h"

namespace aggpriv {

enum class OneDimBranch { kNone, kFixedPoint, kMax, kMin, kWalk };

const char* branch_name(OneDimBranch b);

// Public output of a one-dimensional run.
struct OneDimTranscript {
  OneDimBranch branch = OneDimBranch::kNone;
  double alpha = 0.0;
  double xi = 0.0;       // ABR slack used to build profiles (0 for PSummNash)
  double s = 0.0;        // associated grid aggregator
  double s_prev = 0.0;   // lower end of the walk for PSummNash
  int walk_step = -1;    // j' of the walk, -1 when unused
  std::vector<long long> queries;  // queries answered by each Sparse session
};

struct PsnConfig {
  double epsilon = 1.0;
  // Zero selects the precondition bound.
  double alpha = 0.0;
  double beta = 0.05;
};

// 100 gamma (ln(2 W n) + ln(c / beta)) / eps.
double onedim_alpha_bound(double gamma, double W, int n, double beta,
                          double epsilon, double c);

struct PsnResult {
  RunStatus status = RunStatus::kAbort;
  PureProfile profile;
  OneDimTranscript transcript;
  double alpha = 0.0;
  double W = 0.0;  // snapped to a multiple of alpha
  long long K = 0;
  double bound = 0.0;  // 10 alpha + 2 gamma_eff
  // Noise-free diagnostics.
  bool bracket_found = false;    // some Q'_l equals -5 alpha
  double walk_gap = 0.0;         // min_j |S(x^j) - l alpha| on the walk taken
};

PsnResult psummnash(const QuasiAggregativeGame& game, const PsnConfig& config,
                    NoiseSource& src);

int psummnash_replay_player(const QuasiAggregativeGame& game,
                            const OneDimTranscript& transcript, int i);

}  // namespace aggpriv
