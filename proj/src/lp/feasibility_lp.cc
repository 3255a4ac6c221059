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

#include "aggpriv/lp/feasibility_lp.h"

#include <cmath>
#include <limits>
#include <string>

#include "aggpriv/dp/exponential_mechanism.h"
#include "aggpriv/errors.h"

namespace aggpriv {

void FeasibilityLP::validate() const {
  if (n < 1 || m < 1) throw ParameterError("lp: n and m must be positive");
  if (!(gamma > 0.0)) throw ParameterError("lp: gamma must be positive");
  if (static_cast<int>(supports.size()) != n) {
    throw ParameterError("lp: need one support per player");
  }
  for (int i = 0; i < n; ++i) {
    const auto& R = supports[i];
    if (R.empty()) {
      throw ParameterError("lp: empty support for player " + std::to_string(i));
    }
    for (std::size_t a = 0; a < R.size(); ++a) {
      if (R[a] < 0 || R[a] >= m || (a > 0 && R[a] <= R[a - 1])) {
        throw ParameterError("lp: support must be ascending action indices");
      }
    }
  }
  for (const auto& c : constraints) {
    if (c.f.rows() != n || c.f.cols() != m) {
      throw ParameterError("lp: constraint matrices must be n x m");
    }
    if (!c.f.allFinite() || c.f.cwiseAbs().maxCoeff() > 1.0 + 1e-12) {
      throw ParameterError("lp: constraint entries must lie in [-1, 1]");
    }
    if (std::isnan(c.b)) throw ParameterError("lp: NaN bound");
  }
}

double constraint_violation(const FeasibilityLP& lp, std::size_t c,
                            const MixedProfile& p) {
  const auto& con = lp.constraints.at(c);
  return lp.gamma * con.f.cwiseProduct(p).sum() - con.b;
}

double max_violation(const FeasibilityLP& lp, const MixedProfile& p) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < lp.constraints.size(); ++c) {
    worst = std::max(worst, constraint_violation(lp, c, p));
  }
  return worst;
}

bool respects_supports(const FeasibilityLP& lp, const MixedProfile& p,
                       double tol) {
  if (p.rows() != lp.n || p.cols() != lp.m) return false;
  for (int i = 0; i < lp.n; ++i) {
    double total = 0.0;
    std::size_t next = 0;
    const auto& R = lp.supports[i];
    for (int j = 0; j < lp.m; ++j) {
      if (next < R.size() && R[next] == j) {
        ++next;
        if (p(i, j) < 0.0) return false;
        total += p(i, j);
      } else if (p(i, j) != 0.0) {
        return false;
      }
    }
    if (std::abs(total - 1.0) > tol) return false;
  }
  return true;
}

std::size_t most_violated(const FeasibilityLP& lp, const MixedProfile& p,
                          SelectMode mode, double epsilon, NoiseSource* src) {
  if (lp.constraints.empty()) {
    throw ParameterError("most_violated: no constraints");
  }
  std::vector<double> scores(lp.constraints.size());
  for (std::size_t c = 0; c < scores.size(); ++c) {
    scores[c] = constraint_violation(lp, c, p);
  }
  if (mode == SelectMode::kExact) {
    std::size_t arg = 0;
    for (std::size_t c = 1; c < scores.size(); ++c) {
      if (scores[c] > scores[arg]) arg = c;
    }
    return arg;
  }
  if (src == nullptr) throw ParameterError("most_violated: missing noise source");
  return exponential_mechanism(scores, lp.gamma, epsilon, *src);
}

MixedProfile uniform_on_supports(const FeasibilityLP& lp) {
  MixedProfile p = MixedProfile::Zero(lp.n, lp.m);
  for (int i = 0; i < lp.n; ++i) {
    const double w = 1.0 / static_cast<double>(lp.supports[i].size());
    for (int j : lp.supports[i]) p(i, j) = w;
  }
  return p;
}

}  // namespace aggpriv
