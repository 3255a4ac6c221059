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

#include "aggpriv/dp/sparse_vector.h"

#include <cmath>

#include "aggpriv/errors.h"

namespace aggpriv {

SparseSession::SparseSession(double sensitivity, double threshold, int budget,
                             double epsilon, NoiseSource& src)
    : src_(&src),
      sensitivity_(sensitivity),
      threshold_(threshold),
      budget_(budget),
      epsilon_(epsilon) {
  if (!(sensitivity >= 0.0)) {
    throw ParameterError("sparse: sensitivity must be nonnegative");
  }
  if (budget < 1) throw ParameterError("sparse: budget must be >= 1");
  if (!(epsilon > 0.0)) throw ParameterError("sparse: epsilon must be > 0");
  if (!std::isfinite(threshold)) {
    throw ParameterError("sparse: threshold must be finite");
  }
  noisy_threshold_ = threshold_ + src_->laplace(threshold_noise_scale());
}

double SparseSession::query_noise_scale() const {
  return 2.0 * budget_ * sensitivity_ / epsilon_;
}

double SparseSession::threshold_noise_scale() const {
  return 2.0 * sensitivity_ / epsilon_;
}

SparseAnswer SparseSession::answer(double query_value) {
  if (halted_) throw StateError("sparse: session already halted");
  ++queries_;
  const double noisy = query_value + src_->laplace(query_noise_scale());
  if (noisy <= noisy_threshold_) {
    ++count_;
    if (count_ >= budget_) halted_ = true;
    return {SparseOutcome::kBelow, noisy};
  }
  return {SparseOutcome::kAbove, 0.0};
}

double sparse_accuracy_bound(int budget, double sensitivity,
                             std::size_t num_queries, double beta,
                             double epsilon) {
  if (budget < 1 || num_queries < 1 || !(beta > 0.0 && beta < 1.0) ||
      !(epsilon > 0.0) || sensitivity < 0.0) {
    throw ParameterError("sparse_accuracy_bound: invalid arguments");
  }
  return 4.0 * budget * sensitivity *
         (std::log(static_cast<double>(num_queries)) +
          std::log(2.0 * budget / beta)) /
         epsilon;
}

}  // namespace aggpriv
