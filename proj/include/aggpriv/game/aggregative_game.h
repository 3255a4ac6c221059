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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aggpriv/game/utility.h"

namespace aggpriv {

// x[i] is player i's action index.
using PureProfile = std::vector<int>;
// Row i is player i's distribution over the m actions.
using MixedProfile = Eigen::MatrixXd;

// n players, m actions and a d-dimensional linear aggregator
// S_k(x) = gamma * sum_i f[i][k][x_i]. The influence tensor is stored as d
// matrices F^k of shape n x m. Immutable after construction.
class AggregativeGame {
 public:
  AggregativeGame(int n, int m, int d, double gamma, double W,
                  std::vector<Eigen::MatrixXd> influence, Utility utility,
                  std::optional<Eigen::MatrixXd> loss = std::nullopt);

  int n() const { return n_; }
  int m() const { return m_; }
  int d() const { return d_; }
  double gamma() const { return gamma_; }
  double W() const { return W_; }

  const Eigen::MatrixXd& influence(int k) const { return influence_[k]; }
  const std::vector<Eigen::MatrixXd>& influence() const { return influence_; }
  double f(int i, int k, int j) const { return influence_[k](i, j); }
  // Column vector (f[i][0][j], ..., f[i][d-1][j]).
  Eigen::VectorXd f_vector(int i, int j) const;

  const Utility& utility() const { return utility_; }
  double utility(int i, int action,
                 const Eigen::Ref<const Eigen::VectorXd>& s) const {
    return evaluate_utility(utility_, i, action, s);
  }

  bool has_loss() const { return loss_.has_value(); }
  // n x m table with entries in [0, 1]; zero when the game has no loss.
  const Eigen::MatrixXd& loss() const;

  // gamma * max_{i,k} (max_j f - min_j f): the largest sup-norm change of S
  // any single deviation can cause.
  double gamma_eff() const { return gamma_eff_; }

  // Soft diagnostics raised at construction (e.g. gamma outside the
  // intended band); never fatal.
  const std::vector<std::string>& warnings() const { return warnings_; }

  void check_profile(const PureProfile& x) const;
  void check_mixed(const MixedProfile& p) const;

 private:
  int n_;
  int m_;
  int d_;
  double gamma_;
  double W_;
  std::vector<Eigen::MatrixXd> influence_;
  Utility utility_;
  std::optional<Eigen::MatrixXd> loss_;
  Eigen::MatrixXd zero_loss_;
  double gamma_eff_ = 0.0;
  std::vector<std::string> warnings_;
};

}  // namespace aggpriv
