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

#include "aggpriv/onedim/psummnash.h"

namespace aggpriv {

// alpha + 2 (2 eps + beta + delta).
double mediated_eta(double alpha, double epsilon, double beta, double delta);

// Participation game mediated by PSummNash. Player `player` reports
// (misreport_threshold, misreport_weight) instead of her true type and then
// follows the suggested action. On Abort every player is told to opt out.
struct DeviationSpec {
  std::vector<double> thresholds;
  std::vector<double> weights;
  int player = 0;
  double misreport_threshold = 0.0;
  double misreport_weight = 1.0;
  PsnConfig psn;
  int runs = 200;
  std::uint64_t seed = 0;
  bool no_noise = false;
};

struct DeviationReport {
  int runs = 0;
  int aborts = 0;
  double mean_gain = 0.0;
  double std_error = 0.0;
  double max_gain = 0.0;
  double alpha = 0.0;  // mediator accuracy: 10 alpha + 2 gamma_eff
  double eta = 0.0;
  std::vector<double> gains;
};

// Gain = u_i(misreport, follow) - u_i(truth, follow), both evaluated with
// the true type; the two runs of each repetition share their seed.
DeviationReport deviation_test(const DeviationSpec& spec);

}  // namespace aggpriv
