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

#include <cstddef>
#include <span>
#include <vector>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/errors.h"

namespace aggpriv {

// Samples index r with probability proportional to
// exp(epsilon * scores[r] / (2 * sensitivity)). In noise-off mode returns the
// first index attaining the maximum score.
std::size_t exponential_mechanism(std::span<const double> scores,
                                  double sensitivity, double epsilon,
                                  NoiseSource& src);

// Selection probabilities used by exponential_mechanism.
std::vector<double> exponential_mechanism_probabilities(
    std::span<const double> scores, double sensitivity, double epsilon);

template <typename Handle>
struct ScoredOutcomeSet {
  std::vector<Handle> outcomes;
  std::vector<double> scores;
  double sensitivity = 1.0;
};

template <typename Handle>
const Handle& exponential_mechanism(const ScoredOutcomeSet<Handle>& set,
                                    double epsilon, NoiseSource& src) {
  if (set.outcomes.size() != set.scores.size()) {
    throw ParameterError("scored outcome set: outcomes/scores size mismatch");
  }
  return set.outcomes[exponential_mechanism(set.scores, set.sensitivity,
                                            epsilon, src)];
}

// With probability >= 1 - beta the selected score is within
// 2*sensitivity*ln(|R|/beta)/epsilon of the best.
double exp_mechanism_accuracy_bound(std::size_t num_outcomes,
                                    double sensitivity, double epsilon,
                                    double beta);

// Overload for non-integral outcome counts (analytic checks).
double exp_mechanism_accuracy_bound(double num_outcomes, double sensitivity,
                                    double epsilon, double beta);

}  // namespace aggpriv
