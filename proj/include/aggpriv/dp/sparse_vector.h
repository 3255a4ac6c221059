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
#include <string>

#include "aggpriv/dp/noise_source.h"

namespace aggpriv {

enum class SparseOutcome { kBelow, kAbove };

struct SparseAnswer {
  SparseOutcome outcome = SparseOutcome::kAbove;
  // Noisy query value; meaningful only for kBelow.
  double value = 0.0;

  bool below() const { return outcome == SparseOutcome::kBelow; }
};

// Below-threshold sparse vector mechanism. The noisy threshold is drawn at
// construction with scale 2*sensitivity/epsilon; every query gets fresh
// Lap(2*budget*sensitivity/epsilon) noise. After `budget` below-threshold
// answers the session halts.
class SparseSession {
 public:
  SparseSession(double sensitivity, double threshold, int budget,
                double epsilon, NoiseSource& src);

  // Throws StateError if the session has halted.
  SparseAnswer answer(double query_value);

  double sensitivity() const { return sensitivity_; }
  double threshold() const { return threshold_; }
  double noisy_threshold() const { return noisy_threshold_; }
  int budget() const { return budget_; }
  double epsilon() const { return epsilon_; }
  int count() const { return count_; }
  bool halted() const { return halted_; }
  std::size_t queries_answered() const { return queries_; }

  double query_noise_scale() const;
  double threshold_noise_scale() const;

 private:
  NoiseSource* src_;
  double sensitivity_;
  double threshold_;
  int budget_;
  double epsilon_;
  double noisy_threshold_;
  int count_ = 0;
  bool halted_ = false;
  std::size_t queries_ = 0;
};

// Accuracy radius of the sparse vector mechanism over `num_queries` queries:
// 4*c*sensitivity*(ln N + ln(2c/beta))/epsilon.
double sparse_accuracy_bound(int budget, double sensitivity,
                             std::size_t num_queries, double beta,
                             double epsilon);

}  // namespace aggpriv
