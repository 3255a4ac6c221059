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

#include "aggpriv/dp/exponential_mechanism.h"

#include <algorithm>
#include <cmath>

namespace aggpriv {
namespace {

void check_arguments(std::span<const double> scores, double sensitivity,
                     double epsilon) {
  if (scores.empty()) throw ParameterError("exponential mechanism: empty set");
  if (!(sensitivity > 0.0)) {
    throw ParameterError("exponential mechanism: sensitivity must be > 0");
  }
  if (!(epsilon > 0.0)) {
    throw ParameterError("exponential mechanism: epsilon must be > 0");
  }
}

std::size_t argmax_first(std::span<const double> scores) {
  return static_cast<std::size_t>(
      std::max_element(scores.begin(), scores.end()) - scores.begin());
}

// exp(w_r - max w) for w_r = epsilon * score / (2 sensitivity).
std::vector<double> shifted_weights(std::span<const double> scores,
                                    double sensitivity, double epsilon) {
  const double scale = epsilon / (2.0 * sensitivity);
  const double top = scores[argmax_first(scores)] * scale;
  std::vector<double> w(scores.size());
  for (std::size_t r = 0; r < scores.size(); ++r) {
    w[r] = std::exp(scores[r] * scale - top);
  }
  return w;
}

}  // namespace

std::vector<double> exponential_mechanism_probabilities(
    std::span<const double> scores, double sensitivity, double epsilon) {
  check_arguments(scores, sensitivity, epsilon);
  std::vector<double> w = shifted_weights(scores, sensitivity, epsilon);
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

std::size_t exponential_mechanism(std::span<const double> scores,
                                  double sensitivity, double epsilon,
                                  NoiseSource& src) {
  check_arguments(scores, sensitivity, epsilon);
  if (src.noise_off()) return argmax_first(scores);
  const std::vector<double> w = shifted_weights(scores, sensitivity, epsilon);
  double total = 0.0;
  for (double x : w) total += x;
  const double target = src.uniform() * total;
  double running = 0.0;
  for (std::size_t r = 0; r < w.size(); ++r) {
    running += w[r];
    if (target < running) return r;
  }
  // Rounding left target at the very top of the last bucket.
  for (std::size_t r = w.size(); r-- > 0;) {
    if (w[r] > 0.0) return r;
  }
  return w.size() - 1;
}

double exp_mechanism_accuracy_bound(double num_outcomes, double sensitivity,
                                    double epsilon, double beta) {
  if (!(num_outcomes > 0.0) || !(sensitivity > 0.0) || !(epsilon > 0.0) ||
      !(beta > 0.0 && beta <= 1.0)) {
    throw ParameterError("exp_mechanism_accuracy_bound: invalid arguments");
  }
  return 2.0 * sensitivity * std::log(num_outcomes / beta) / epsilon;
}

double exp_mechanism_accuracy_bound(std::size_t num_outcomes,
                                    double sensitivity, double epsilon,
                                    double beta) {
  return exp_mechanism_accuracy_bound(static_cast<double>(num_outcomes),
                                      sensitivity, epsilon, beta);
}

}  // namespace aggpriv
