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

#include <Eigen/Dense>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/game/aggregative_game.h"

namespace aggpriv {

// gamma * <f, p> <= b.
struct CrossConstraint {
  Eigen::MatrixXd f;  // n x m, entries in [-1, 1]
  double b = 0.0;
};

// Cross-agent linear constraints plus per-player restricted simplices.
struct FeasibilityLP {
  int n = 0;
  int m = 0;
  double gamma = 0.0;
  std::vector<CrossConstraint> constraints;
  std::vector<std::vector<int>> supports;  // R_i, ascending, nonempty

  void validate() const;
};

// gamma * <f, p> - b.
double constraint_violation(const FeasibilityLP& lp, std::size_t c,
                            const MixedProfile& p);

// max_c (gamma * <f_c, p> - b_c).
double max_violation(const FeasibilityLP& lp, const MixedProfile& p);

// True when every row of p sums to one and vanishes off its support.
bool respects_supports(const FeasibilityLP& lp, const MixedProfile& p,
                       double tol = 1e-12);

enum class SelectMode { kExact, kExponential };

// Index of the constraint with the largest score gamma<f,p> - b (lowest
// index on ties), or one drawn by the exponential mechanism with
// sensitivity gamma and budget epsilon.
std::size_t most_violated(const FeasibilityLP& lp, const MixedProfile& p,
                          SelectMode mode, double epsilon, NoiseSource* src);

// Uniform distribution over each player's support.
MixedProfile uniform_on_supports(const FeasibilityLP& lp);

}  // namespace aggpriv
