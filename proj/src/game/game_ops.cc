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

#include "aggpriv/game/game_ops.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aggpriv/errors.h"

namespace aggpriv {
namespace {

int uniform_index(NoiseSource& src, int m) {
  return std::min(m - 1, static_cast<int>(src.uniform() * m));
}

}  // namespace

Eigen::VectorXd aggregator(const AggregativeGame& game, const PureProfile& x) {
  game.check_profile(x);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(game.d());
  for (int k = 0; k < game.d(); ++k) {
    const auto& F = game.influence(k);
    double acc = 0.0;
    for (int i = 0; i < game.n(); ++i) acc += F(i, x[i]);
    s(k) = game.gamma() * acc;
  }
  return s;
}

Eigen::VectorXd expected_aggregator(const AggregativeGame& game,
                                    const MixedProfile& p) {
  game.check_mixed(p);
  Eigen::VectorXd s(game.d());
  for (int k = 0; k < game.d(); ++k) {
    s(k) = game.gamma() * game.influence(k).cwiseProduct(p).sum();
  }
  return s;
}

Eigen::VectorXd deviated_aggregator(const AggregativeGame& game,
                                    const PureProfile& x,
                                    const Eigen::VectorXd& s, int i, int a) {
  Eigen::VectorXd out = s;
  for (int k = 0; k < game.d(); ++k) {
    out(k) += game.gamma() * (game.f(i, k, a) - game.f(i, k, x[i]));
  }
  return out;
}

double abr_regret(const AggregativeGame& game, int i, int a,
                  const Eigen::Ref<const Eigen::VectorXd>& s) {
  double best = -std::numeric_limits<double>::infinity();
  for (int b = 0; b < game.m(); ++b) best = std::max(best, game.utility(i, b, s));
  return best - game.utility(i, a, s);
}

std::vector<int> abr_set(const AggregativeGame& game, int i,
                         const Eigen::Ref<const Eigen::VectorXd>& s,
                         double eta) {
  std::vector<double> u(game.m());
  double best = -std::numeric_limits<double>::infinity();
  for (int b = 0; b < game.m(); ++b) {
    u[b] = game.utility(i, b, s);
    best = std::max(best, u[b]);
  }
  std::vector<int> out;
  for (int b = 0; b < game.m(); ++b) {
    if (u[b] >= best - eta) out.push_back(b);
  }
  return out;
}

int abr_action(const AggregativeGame& game, int i,
               const Eigen::Ref<const Eigen::VectorXd>& s) {
  int arg = 0;
  double best = game.utility(i, 0, s);
  for (int b = 1; b < game.m(); ++b) {
    const double v = game.utility(i, b, s);
    if (v > best) {
      best = v;
      arg = b;
    }
  }
  return arg;
}

PureProfile abr_profile(const AggregativeGame& game,
                        const Eigen::Ref<const Eigen::VectorXd>& s) {
  PureProfile x(game.n());
  for (int i = 0; i < game.n(); ++i) x[i] = abr_action(game, i, s);
  return x;
}

double player_regret(const AggregativeGame& game, const PureProfile& x,
                     const Eigen::VectorXd& s, int i) {
  const double current = game.utility(i, x[i], s);
  double best = current;
  for (int a = 0; a < game.m(); ++a) {
    if (a == x[i]) continue;
    best = std::max(best,
                    game.utility(i, a, deviated_aggregator(game, x, s, i, a)));
  }
  return best - current;
}

RegretReport regret(const AggregativeGame& game, const PureProfile& x) {
  const Eigen::VectorXd s = aggregator(game, x);
  RegretReport r;
  r.per_player.resize(game.n());
  for (int i = 0; i < game.n(); ++i) {
    r.per_player(i) = player_regret(game, x, s, i);
  }
  r.max = r.per_player.maxCoeff();
  return r;
}

double profile_loss(const AggregativeGame& game, const PureProfile& x) {
  game.check_profile(x);
  double acc = 0.0;
  for (int i = 0; i < game.n(); ++i) acc += game.loss()(i, x[i]);
  return game.gamma() * acc;
}

double expected_loss(const AggregativeGame& game, const MixedProfile& p) {
  game.check_mixed(p);
  return game.gamma() * game.loss().cwiseProduct(p).sum();
}

MixedProfile point_mass(const AggregativeGame& game, const PureProfile& x) {
  game.check_profile(x);
  MixedProfile p = MixedProfile::Zero(game.n(), game.m());
  for (int i = 0; i < game.n(); ++i) p(i, x[i]) = 1.0;
  return p;
}

int sample_player(const Eigen::Ref<const Eigen::RowVectorXd>& row,
                  std::uint64_t base_seed, int i) {
  const double u = bits_to_open_unit(
      mix_seed(base_seed, static_cast<std::uint64_t>(i)));
  double acc = 0.0;
  int last = -1;
  for (Eigen::Index j = 0; j < row.size(); ++j) {
    if (row(j) <= 0.0) continue;
    last = static_cast<int>(j);
    acc += row(j);
    if (u < acc) return last;
  }
  if (last < 0) throw ParameterError("sample_player: empty distribution");
  return last;
}

PureProfile sample_profile(const AggregativeGame& game, const MixedProfile& p,
                           std::uint64_t base_seed) {
  game.check_mixed(p);
  PureProfile x(game.n());
  for (int i = 0; i < game.n(); ++i) x[i] = sample_player(p.row(i), base_seed, i);
  return x;
}

PureProfile sample_profile(const AggregativeGame& game, const MixedProfile& p,
                           NoiseSource& src) {
  return sample_profile(game, p, src.next_u64());
}

TranslationReport translate_checks(const AggregativeGame& game,
                                   const PureProfile& x,
                                   const Eigen::VectorXd& shifted,
                                   double tol) {
  const Eigen::VectorXd s = aggregator(game, x);
  const double ge = game.gamma_eff();
  TranslationReport r;
  r.br_regret = regret(game, x).per_player;
  r.abr_regret.resize(game.n());
  r.shift_regret.resize(game.n());
  r.shift_distance = (s - shifted).cwiseAbs().maxCoeff();
  r.max_slack = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < game.n(); ++i) {
    r.abr_regret(i) = abr_regret(game, i, x[i], s);
    r.shift_regret(i) = abr_regret(game, i, x[i], shifted);
    const double v1 = r.abr_regret(i) - (r.br_regret(i) + ge);
    const double v2 = r.br_regret(i) - (r.abr_regret(i) + ge);
    const double v3 =
        r.shift_regret(i) - (r.abr_regret(i) + 2.0 * r.shift_distance);
    if (v1 > tol) ++r.br_to_abr_violations;
    if (v2 > tol) ++r.abr_to_br_violations;
    if (v3 > tol) ++r.shift_violations;
    r.max_slack = std::max({r.max_slack, v1, v2, v3});
  }
  return r;
}

PureProfile random_profile(const AggregativeGame& game, NoiseSource& src) {
  PureProfile x(game.n());
  for (auto& a : x) a = uniform_index(src, game.m());
  return x;
}

double sampled_influence(const AggregativeGame& game, NoiseSource& src,
                         int trials) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    PureProfile x = random_profile(game, src);
    const int i = uniform_index(src, game.n());
    const int a = uniform_index(src, game.m());
    const int b = uniform_index(src, game.m());
    x[i] = a;
    const Eigen::VectorXd sa = aggregator(game, x);
    x[i] = b;
    const Eigen::VectorXd sb = aggregator(game, x);
    worst = std::max(worst, (sa - sb).cwiseAbs().maxCoeff());
  }
  return worst;
}

double sampled_lipschitz(const AggregativeGame& game, NoiseSource& src,
                         int trials) {
  double worst = 0.0;
  const int d = game.d();
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd s(d), s2(d);
    for (int k = 0; k < d; ++k) {
      s(k) = game.W() * (2.0 * src.uniform() - 1.0);
      s2(k) = game.W() * (2.0 * src.uniform() - 1.0);
    }
    const double dist = (s - s2).cwiseAbs().maxCoeff();
    if (dist <= 0.0) continue;
    const int i = uniform_index(src, game.n());
    const int a = uniform_index(src, game.m());
    worst = std::max(worst, std::abs(game.utility(i, a, s) -
                                     game.utility(i, a, s2)) /
                                dist);
  }
  return worst;
}

}  // namespace aggpriv
