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

#include <cmath>
#include <span>

#include <Eigen/Dense>

#include "aggpriv/errors.h"

namespace aggpriv {

// w_j = p_j * exp(-eta * loss_j).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> mw_update(
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& p,
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& loss,
    Scalar eta) {
  if (!(eta > Scalar(0))) throw ParameterError("mw_update: eta must be > 0");
  if (p.size() != loss.size()) throw ParameterError("mw_update: size mismatch");
  return p.cwiseProduct((-eta * loss).array().exp().matrix());
}

// Relative-entropy projection of nonnegative weights onto the simplex
// restricted to `support`: zero outside, proportional inside.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> kl_project(
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& w,
    std::span<const int> support) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(w.size());
  Scalar total(0);
  for (int j : support) {
    if (j < 0 || j >= w.size()) throw ParameterError("kl_project: bad support");
    if (w(j) < Scalar(0)) throw ParameterError("kl_project: negative weight");
    total += w(j);
  }
  if (!(total > Scalar(0))) {
    throw DegenerateError("kl_project: weights vanish on the support");
  }
  for (int j : support) out(j) = w(j) / total;
  return out;
}

}  // namespace aggpriv
