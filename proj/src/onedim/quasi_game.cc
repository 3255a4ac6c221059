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

#include "aggpriv/onedim/quasi_game.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"

namespace aggpriv {
namespace {

Eigen::VectorXd one(double s) { return Eigen::VectorXd::Constant(1, s); }

void check_order(const AggregativeGame& g, const ActionOrder& order) {
  if (static_cast<int>(order.size()) != g.n()) {
    throw ParameterError("action order: need one order per player");
  }
  for (const auto& o : order) {
    std::vector<int> sorted = o;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> all(g.m());
    std::iota(all.begin(), all.end(), 0);
    if (sorted != all) {
      throw ParameterError("action order: must be a permutation of actions");
    }
  }
}

}  // namespace

QualityFn QualityFn::linear(double slope, double intercept) {
  return {[slope, intercept](double s) { return slope * s + intercept; },
          std::abs(slope), "linear"};
}

QualityFn QualityFn::table(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw ParameterError("quality table: need matching nonempty xs and ys");
  }
  double lip = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw ParameterError("quality table: xs must increase");
    }
    lip = std::max(lip, std::abs(ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]));
  }
  auto fn = [xs = std::move(xs), ys = std::move(ys)](double s) {
    if (s <= xs.front()) return ys.front();
    if (s >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), s);
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (s - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
  };
  return {std::move(fn), lip, "table"};
}

QualityFn QualityFn::constant(double value) {
  return {[value](double) { return value; }, 0.0, "constant"};
}

QuasiAggregativeGame::QuasiAggregativeGame(AggregativeGame base,
                                           std::optional<ActionOrder> order)
    : base_(std::move(base)), gamma_(base_.gamma()), order_(std::move(order)) {
  if (base_.d() != 1) throw ParameterError("quasi game: requires d = 1");
  if (!order_) order_ = linear_action_order(base_);
  check_order(base_, *order_);
}

QuasiAggregativeGame::QuasiAggregativeGame(AggregativeGame base,
                                           AggregatorFn aggregator,
                                           double gamma,
                                           std::optional<ActionOrder> order)
    : base_(std::move(base)),
      aggregator_(std::move(aggregator)),
      gamma_(gamma),
      order_(std::move(order)) {
  if (base_.d() != 1) throw ParameterError("quasi game: requires d = 1");
  if (!aggregator_) throw ParameterError("quasi game: missing aggregator");
  if (!(gamma > 0.0)) throw ParameterError("quasi game: gamma must be > 0");
  if (order_) check_order(base_, *order_);
}

double QuasiAggregativeGame::gamma_eff() const {
  return general() ? gamma_ : base_.gamma_eff();
}

double QuasiAggregativeGame::aggregate(const PureProfile& x) const {
  if (aggregator_) {
    base_.check_profile(x);
    return aggregator_(x);
  }
  return aggregator(base_, x)(0);
}

double QuasiAggregativeGame::utility(int i, int a, double s) const {
  return base_.utility(i, a, one(s));
}

const ActionOrder& QuasiAggregativeGame::order() const {
  if (!order_) throw StateError("quasi game: no action order declared");
  return *order_;
}

ActionOrder linear_action_order(const AggregativeGame& game) {
  ActionOrder order(game.n());
  for (int i = 0; i < game.n(); ++i) {
    auto& o = order[i];
    o.resize(game.m());
    std::iota(o.begin(), o.end(), 0);
    std::stable_sort(o.begin(), o.end(), [&](int a, int b) {
      return game.f(i, 0, a) > game.f(i, 0, b);
    });
  }
  return order;
}

PureProfile ba_profile(const QuasiAggregativeGame& game, double s) {
  return abr_profile(game.base(), one(s));
}

double V(const QuasiAggregativeGame& game, double s) {
  return game.aggregate(ba_profile(game, s));
}

std::vector<PureProfile> smooth_walk(const PureProfile& hi,
                                     const PureProfile& lo) {
  if (hi.size() != lo.size()) throw ParameterError("smooth_walk: length mismatch");
  const std::size_t n = hi.size();
  std::vector<PureProfile> walk;
  walk.reserve(n + 1);
  PureProfile x = lo;
  walk.push_back(x);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = hi[j];
    walk.push_back(x);
  }
  return walk;
}

Extremes s_extremes(const QuasiAggregativeGame& game, double s, double xi) {
  const ActionOrder& order = game.order();
  Extremes e;
  e.x_min.resize(game.n());
  e.x_max.resize(game.n());
  const Eigen::VectorXd sv = one(s);
  for (int i = 0; i < game.n(); ++i) {
    const std::vector<int> set = abr_set(game.base(), i, sv, xi);
    std::vector<bool> in(game.m(), false);
    for (int a : set) in[a] = true;
    int first = -1;
    int last = -1;
    for (int a : order[i]) {
      if (!in[a]) continue;
      if (first < 0) first = a;
      last = a;
    }
    e.x_max[i] = first;
    e.x_min[i] = last;
  }
  e.s_max = game.aggregate(e.x_max);
  e.s_min = game.aggregate(e.x_min);
  return e;
}

double quasi_player_regret(const QuasiAggregativeGame& game,
                           const PureProfile& x, int i) {
  if (!game.general()) {
    return player_regret(game.base(), x, aggregator(game.base(), x), i);
  }
  const double s = game.aggregate(x);
  const double current = game.utility(i, x[i], s);
  double best = current;
  PureProfile y = x;
  for (int a = 0; a < game.m(); ++a) {
    if (a == x[i]) continue;
    y[i] = a;
    best = std::max(best, game.utility(i, a, game.aggregate(y)));
  }
  return best - current;
}

double quasi_regret(const QuasiAggregativeGame& game, const PureProfile& x) {
  if (!game.general()) return regret(game.base(), x).max;
  double worst = 0.0;
  for (int i = 0; i < game.n(); ++i) {
    worst = std::max(worst, quasi_player_regret(game, x, i));
  }
  return worst;
}

double quasi_sampled_influence(const QuasiAggregativeGame& game,
                               NoiseSource& src, int trials) {
  double worst = 0.0;
  auto pick = [&](int k) {
    return std::min(k - 1, static_cast<int>(src.uniform() * k));
  };
  for (int t = 0; t < trials; ++t) {
    PureProfile x(game.n());
    for (auto& a : x) a = pick(game.m());
    const int i = pick(game.n());
    x[i] = pick(game.m());
    const double s1 = game.aggregate(x);
    x[i] = pick(game.m());
    worst = std::max(worst, std::abs(s1 - game.aggregate(x)));
  }
  return worst;
}

int order_violations(const QuasiAggregativeGame& game, NoiseSource& src,
                     int trials, double tol) {
  const ActionOrder& order = game.order();
  auto pick = [&](int k) {
    return std::min(k - 1, static_cast<int>(src.uniform() * k));
  };
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    PureProfile x(game.n());
    for (auto& a : x) a = pick(game.m());
    const int i = pick(game.n());
    int r1 = pick(game.m());
    int r2 = pick(game.m());
    if (r1 == r2) continue;
    if (r1 > r2) std::swap(r1, r2);
    x[i] = order[i][r1];
    const double hi = game.aggregate(x);
    x[i] = order[i][r2];
    if (hi < game.aggregate(x) - tol) ++bad;
  }
  return bad;
}

double sampled_quality_slope(const QualityFn& q, double W, NoiseSource& src,
                             int trials) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double a = W * (2.0 * src.uniform() - 1.0);
    const double b = W * (2.0 * src.uniform() - 1.0);
    if (a == b) continue;
    worst = std::max(worst, std::abs(q(a) - q(b)) / std::abs(a - b));
  }
  return worst;
}

QuasiAggregativeGame make_threshold_game(const std::vector<double>& thresholds,
                                         const std::vector<double>& weights) {
  const int n = static_cast<int>(thresholds.size());
  if (n < 1) throw ParameterError("threshold game: need at least one player");
  if (static_cast<int>(weights.size()) != n) {
    throw ParameterError("threshold game: weights and thresholds differ in size");
  }
  for (double t : thresholds) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw ParameterError("threshold game: thresholds must lie in [0, 1]");
    }
  }
  const double gamma = 1.0 / n;
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(n, 2);
  F.col(0).setOnes();
  ThresholdUtility u;
  u.thresholds = Eigen::Map<const Eigen::VectorXd>(thresholds.data(), n);
  u.weights = Eigen::Map<const Eigen::VectorXd>(weights.data(), n);
  AggregativeGame base(n, 2, 1, gamma, 1.0, {F}, u);
  return QuasiAggregativeGame(std::move(base), ActionOrder(n, {0, 1}));
}

QuasiAggregativeGame make_optin_game(const std::vector<double>& thresholds) {
  return make_threshold_game(thresholds,
                             std::vector<double>(thresholds.size(), 1.0));
}

}  // namespace aggpriv
