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

#include "aggpriv/harness/deviation.h"

#include <algorithm>
#include <cmath>

#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"

namespace aggpriv {
namespace {

double realized_utility(const QuasiAggregativeGame& truth,
                        const PsnResult& run, int i) {
  PureProfile x = run.status == RunStatus::kOk
                      ? run.profile
                      : PureProfile(truth.n(), 1);
  return truth.utility(i, x[i], truth.aggregate(x));
}

}  // namespace

double mediated_eta(double alpha, double epsilon, double beta, double delta) {
  return alpha + 2.0 * (2.0 * epsilon + beta + delta);
}

DeviationReport deviation_test(const DeviationSpec& spec) {
  const int n = static_cast<int>(spec.thresholds.size());
  if (spec.player < 0 || spec.player >= n) {
    throw ParameterError("deviation: player out of range");
  }
  if (spec.runs < 1) throw ParameterError("deviation: runs must be positive");
  const QuasiAggregativeGame truth =
      make_threshold_game(spec.thresholds, spec.weights);
  std::vector<double> th = spec.thresholds;
  std::vector<double> w = spec.weights;
  th[spec.player] = spec.misreport_threshold;
  w[spec.player] = spec.misreport_weight;
  const QuasiAggregativeGame lie = make_threshold_game(th, w);
  const NoiseMode mode = spec.no_noise ? NoiseMode::kNoiseOff : NoiseMode::kNoisy;

  DeviationReport rep;
  rep.runs = spec.runs;
  rep.gains.reserve(spec.runs);
  for (int r = 0; r < spec.runs; ++r) {
    const std::uint64_t seed = mix_seed(spec.seed, static_cast<std::uint64_t>(r));
    NoiseSource a(seed, mode);
    NoiseSource b(seed, mode);
    const PsnResult honest = psummnash(truth, spec.psn, a);
    const PsnResult dishonest = psummnash(lie, spec.psn, b);
    if (honest.status != RunStatus::kOk) ++rep.aborts;
    if (r == 0) {
      rep.alpha = honest.bound;
      rep.eta = mediated_eta(honest.bound, spec.psn.epsilon, spec.psn.beta, 0.0);
    }
    rep.gains.push_back(realized_utility(truth, dishonest, spec.player) -
                        realized_utility(truth, honest, spec.player));
  }
  double sum = 0.0;
  for (double g : rep.gains) sum += g;
  rep.mean_gain = sum / spec.runs;
  double var = 0.0;
  for (double g : rep.gains) var += (g - rep.mean_gain) * (g - rep.mean_gain);
  rep.std_error =
      spec.runs > 1 ? std::sqrt(var / (spec.runs - 1) / spec.runs) : 0.0;
  rep.max_gain = *std::max_element(rep.gains.begin(), rep.gains.end());
  return rep;
}

}  // namespace aggpriv
