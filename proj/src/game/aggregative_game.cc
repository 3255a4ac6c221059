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

#include "aggpriv/game/aggregative_game.h"

#include <cmath>
#include <string>
#include <utility>

#include "aggpriv/errors.h"

namespace aggpriv {
namespace {

constexpr double kSlack = 1e-9;

}  // namespace

AggregativeGame::AggregativeGame(int n, int m, int d, double gamma, double W,
                                 std::vector<Eigen::MatrixXd> influence,
                                 Utility utility,
                                 std::optional<Eigen::MatrixXd> loss)
    : n_(n),
      m_(m),
      d_(d),
      gamma_(gamma),
      W_(W),
      influence_(std::move(influence)),
      utility_(std::move(utility)),
      loss_(std::move(loss)) {
  if (n < 1 || m < 1 || d < 1) {
    throw ParameterError("game: n, m, d must be positive");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("game: gamma must be positive");
  }
  if (!(W > 0.0) || !std::isfinite(W)) {
    throw ParameterError("game: W must be positive");
  }
  if (static_cast<int>(influence_.size()) != d) {
    throw ParameterError("game: influence needs d matrices");
  }
  double spread = 0.0;
  for (int k = 0; k < d; ++k) {
    const auto& F = influence_[k];
    if (F.rows() != n || F.cols() != m) {
      throw ParameterError("game: influence matrices must be n x m");
    }
    if (!F.allFinite() || F.cwiseAbs().maxCoeff() > 1.0 + 1e-12) {
      throw ParameterError("game: influence entries must lie in [-1, 1]");
    }
    const Eigen::VectorXd hi = F.rowwise().maxCoeff();
    const Eigen::VectorXd lo = F.rowwise().minCoeff();
    spread = std::max(spread, (hi - lo).maxCoeff());
    const double reach = gamma * F.cwiseAbs().rowwise().maxCoeff().sum();
    if (reach > W * (1.0 + kSlack) + kSlack) {
      throw ParameterError("game: aggregator can leave [-W, W] (coordinate " +
                           std::to_string(k) + ")");
    }
  }
  gamma_eff_ = gamma * spread;
  if (loss_) {
    if (loss_->rows() != n || loss_->cols() != m) {
      throw ParameterError("game: loss must be n x m");
    }
    if (!loss_->allFinite() || loss_->minCoeff() < 0.0 ||
        loss_->maxCoeff() > 1.0) {
      throw ParameterError("game: loss entries must lie in [0, 1]");
    }
  } else {
    zero_loss_ = Eigen::MatrixXd::Zero(n, m);
  }
  validate_utility(utility_, n, m, d, W);
  if (gamma >= 1.0) warnings_.push_back("gamma >= 1");
  if (gamma * n < 0.1) warnings_.push_back("gamma is far below 1/n");
}

Eigen::VectorXd AggregativeGame::f_vector(int i, int j) const {
  Eigen::VectorXd v(d_);
  for (int k = 0; k < d_; ++k) v(k) = influence_[k](i, j);
  return v;
}

const Eigen::MatrixXd& AggregativeGame::loss() const {
  return loss_ ? *loss_ : zero_loss_;
}

void AggregativeGame::check_profile(const PureProfile& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw ParameterError("profile: length must equal n");
  }
  for (int a : x) {
    if (a < 0 || a >= m_) throw ParameterError("profile: action out of range");
  }
}

void AggregativeGame::check_mixed(const MixedProfile& p) const {
  if (p.rows() != n_ || p.cols() != m_) {
    throw ParameterError("mixed profile: must be n x m");
  }
  if (!p.allFinite() || p.minCoeff() < 0.0) {
    throw ParameterError("mixed profile: negative or non-finite entry");
  }
  for (int i = 0; i < n_; ++i) {
    if (std::abs(p.row(i).sum() - 1.0) > 1e-9) {
      throw ParameterError("mixed profile: row " + std::to_string(i) +
                           " does not sum to 1");
    }
  }
}

}  // namespace aggpriv
