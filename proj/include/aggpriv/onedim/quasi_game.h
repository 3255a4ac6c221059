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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/game/aggregative_game.h"

namespace aggpriv {

// Per player, actions listed from the most optimistic (largest aggregator)
// to the most pessimistic.
using ActionOrder = std::vector<std::vector<int>>;

using AggregatorFn = std::function<double(const PureProfile&)>;

// Lipschitz quality score over aggregator values.
struct QualityFn {
  std::function<double(double)> q;
  double lipschitz = 0.0;
  std::string kind;

  double operator()(double s) const { return q(s); }

  // slope * s + intercept.
  static QualityFn linear(double slope = 1.0, double intercept = 0.0);
  // Piecewise-linear through (xs, ys), constant beyond the ends.
  static QualityFn table(std::vector<double> xs, std::vector<double> ys);
  static QualityFn constant(double value = 0.0);
};

// One-dimensional game. The LINEAR variant aggregates through the base
// game's influence matrix; the GENERAL variant uses a supplied aggregator
// with a declared influence bound. Utilities always come from the base.
class QuasiAggregativeGame {
 public:
  explicit QuasiAggregativeGame(AggregativeGame base,
                                std::optional<ActionOrder> order = std::nullopt);
  QuasiAggregativeGame(AggregativeGame base, AggregatorFn aggregator,
                       double gamma, std::optional<ActionOrder> order);

  const AggregativeGame& base() const { return base_; }
  int n() const { return base_.n(); }
  int m() const { return base_.m(); }
  double gamma() const { return gamma_; }
  double W() const { return base_.W(); }
  bool general() const { return static_cast<bool>(aggregator_); }
  // Influence bound used in verification: the base's gamma_eff for LINEAR,
  // the declared gamma for GENERAL.
  double gamma_eff() const;

  double aggregate(const PureProfile& x) const;
  double utility(int i, int a, double s) const;

  bool has_order() const { return order_.has_value(); }
  const ActionOrder& order() const;

 private:
  AggregativeGame base_;
  AggregatorFn aggregator_;
  double gamma_;
  std::optional<ActionOrder> order_;
};

// Actions of each player sorted by influence descending, lowest index first
// on ties.
ActionOrder linear_action_order(const AggregativeGame& game);

// Aggregator of the deterministic ABR profile to s.
double V(const QuasiAggregativeGame& game, double s);

PureProfile ba_profile(const QuasiAggregativeGame& game, double s);

// Profiles x^0..x^n with x^j_i = hi_i for i < j and lo_i otherwise.
std::vector<PureProfile> smooth_walk(const PureProfile& hi,
                                     const PureProfile& lo);

struct Extremes {
  double s_min = 0.0;
  double s_max = 0.0;
  PureProfile x_min;
  PureProfile x_max;
};

// Every player plays the order-first (x_max) or order-last (x_min) action
// of her xi-ABR set at s.
Extremes s_extremes(const QuasiAggregativeGame& game, double s, double xi);

// Best-response regret with the game's own aggregator.
double quasi_player_regret(const QuasiAggregativeGame& game,
                           const PureProfile& x, int i);
double quasi_regret(const QuasiAggregativeGame& game, const PureProfile& x);

// Largest sampled |S(a, x_-i) - S(a', x_-i)|.
double quasi_sampled_influence(const QuasiAggregativeGame& game,
                               NoiseSource& src, int trials);
// Number of sampled pairs where a precedes a' in the order but
// S(a, x_-i) < S(a', x_-i).
int order_violations(const QuasiAggregativeGame& game, NoiseSource& src,
                     int trials, double tol = 1e-12);
double sampled_quality_slope(const QualityFn& q, double W, NoiseSource& src,
                             int trials);

// Binary participation game: action 0 opts in, action 1 opts out,
// S(x) = (1/n) #opt-in, player i joins once s >= thresholds[i].
QuasiAggregativeGame make_optin_game(const std::vector<double>& thresholds);

// As make_optin_game, with weights in [-1, 1]; negative weights make a
// player prefer to join when few others do.
QuasiAggregativeGame make_threshold_game(const std::vector<double>& thresholds,
                                         const std::vector<double>& weights);

}  // namespace aggpriv
