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

#include "aggpriv/game/utility.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "aggpriv/errors.h"
#include "aggpriv/market/pricing.h"

namespace aggpriv {
namespace {

constexpr double kSlack = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double eval_table(const TableUtility& t, int row,
                  const Eigen::Ref<const Eigen::VectorXd>& s) {
  const auto d = static_cast<int>(t.points.size());
  // Locate the cell and the fractional position along every axis.
  std::vector<int> base(d);
  std::vector<double> frac(d);
  std::vector<int> stride(d);
  int st = 1;
  for (int k = 0; k < d; ++k) {
    stride[k] = st;
    st *= t.points[k];
    const double lo = t.lower(k);
    const double hi = t.upper(k);
    const double h = (hi - lo) / (t.points[k] - 1);
    const double x = std::clamp(s(k), lo, hi);
    int idx = static_cast<int>(std::floor((x - lo) / h));
    idx = std::clamp(idx, 0, t.points[k] - 2);
    base[k] = idx;
    frac[k] = std::clamp((x - (lo + idx * h)) / h, 0.0, 1.0);
  }
  double acc = 0.0;
  for (int corner = 0; corner < (1 << d); ++corner) {
    double weight = 1.0;
    int node = 0;
    for (int k = 0; k < d; ++k) {
      const bool up = (corner >> k) & 1;
      weight *= up ? frac[k] : 1.0 - frac[k];
      node += (base[k] + (up ? 1 : 0)) * stride[k];
    }
    if (weight != 0.0) acc += weight * t.values(row, node);
  }
  return acc;
}

void validate_linear(const LinearUtility& u, int n, int m, int d, double W) {
  if (u.constant.rows() != n || u.constant.cols() != m) {
    throw ParameterError("linear utility: constant must be n x m");
  }
  if (static_cast<int>(u.slope.size()) != d) {
    throw ParameterError("linear utility: need one slope matrix per coordinate");
  }
  for (const auto& w : u.slope) {
    if (w.rows() != n || w.cols() != m) {
      throw ParameterError("linear utility: slope matrices must be n x m");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      double l1 = 0.0;
      for (int k = 0; k < d; ++k) l1 += std::abs(u.slope[k](i, j));
      if (l1 > 1.0 + kSlack) {
        throw ParameterError("linear utility: slope l1-norm exceeds 1 (player " +
                             std::to_string(i) + ")");
      }
      if (std::abs(u.constant(i, j)) + W * l1 > 1.0 + kSlack) {
        throw ParameterError(
            "linear utility: range leaves [-1, 1] on the aggregator box");
      }
    }
  }
}

void validate_table(const TableUtility& t, int n, int m, int d) {
  if (t.actions != m) throw ParameterError("table utility: actions must equal m");
  if (static_cast<int>(t.points.size()) != d || t.lower.size() != d ||
      t.upper.size() != d) {
    throw ParameterError("table utility: grid dimension must equal d");
  }
  int nodes = 1;
  for (int k = 0; k < d; ++k) {
    if (t.points[k] < 2) throw ParameterError("table utility: need >= 2 nodes");
    if (!(t.upper(k) > t.lower(k))) {
      throw ParameterError("table utility: empty grid interval");
    }
    nodes *= t.points[k];
  }
  if (t.values.rows() != static_cast<Eigen::Index>(n) * m ||
      t.values.cols() != nodes) {
    throw ParameterError("table utility: values must be (n*m) x nodes");
  }
  if (t.values.size() > 0 && t.values.cwiseAbs().maxCoeff() > 1.0 + kSlack) {
    throw ParameterError("table utility: values must lie in [-1, 1]");
  }
  // Within a cell the partial derivative along axis k is a convex combination
  // of the edge slopes along k, so sum_k max|edge slope| <= 1 certifies
  // 1-Lipschitz continuity in the sup-norm.
  std::vector<int> stride(d);
  std::vector<double> h(d);
  int st = 1;
  for (int k = 0; k < d; ++k) {
    stride[k] = st;
    st *= t.points[k];
    h[k] = (t.upper(k) - t.lower(k)) / (t.points[k] - 1);
  }
  int cells = 1;
  for (int k = 0; k < d; ++k) cells *= t.points[k] - 1;
  for (Eigen::Index row = 0; row < t.values.rows(); ++row) {
    for (int c = 0; c < cells; ++c) {
      int rem = c;
      int origin = 0;
      for (int k = 0; k < d; ++k) {
        origin += (rem % (t.points[k] - 1)) * stride[k];
        rem /= t.points[k] - 1;
      }
      double total = 0.0;
      for (int k = 0; k < d; ++k) {
        double worst = 0.0;
        for (int corner = 0; corner < (1 << d); ++corner) {
          if ((corner >> k) & 1) continue;
          int node = origin;
          for (int a = 0; a < d; ++a) {
            if ((corner >> a) & 1) node += stride[a];
          }
          const double slope =
              std::abs(t.values(row, node + stride[k]) - t.values(row, node)) /
              h[k];
          worst = std::max(worst, slope);
        }
        total += worst;
      }
      if (total > 1.0 + 1e-9) {
        throw ParameterError("table utility: not 1-Lipschitz (row " +
                             std::to_string(row) + ")");
      }
    }
  }
}

void validate_market(const MarketUtility& u, int n, int m, int d) {
  if (!(u.lambda > 0.0)) throw ParameterError("market utility: lambda <= 0");
  if (m != market::num_portfolios(d)) {
    throw ParameterError("market utility: m must equal 3^d");
  }
  if (u.valuations.rows() != n || u.valuations.cols() != m) {
    throw ParameterError("market utility: valuations must be n x 3^d");
  }
  if (u.valuations.size() > 0 &&
      u.valuations.cwiseAbs().maxCoeff() > d + kSlack) {
    throw ParameterError("market utility: valuations must lie in [-d, d]");
  }
}

void validate_threshold(const ThresholdUtility& u, int n, int m, int d) {
  if (d != 1 || m != 2) {
    throw ParameterError("threshold utility: requires d = 1 and m = 2");
  }
  if (u.thresholds.size() != n || u.weights.size() != n) {
    throw ParameterError("threshold utility: need n thresholds and weights");
  }
  if (n > 0 && u.weights.cwiseAbs().maxCoeff() > 1.0 + kSlack) {
    throw ParameterError("threshold utility: weights must lie in [-1, 1]");
  }
  if (n > 0 && !u.thresholds.allFinite()) {
    throw ParameterError("threshold utility: thresholds must be finite");
  }
}

}  // namespace

std::string utility_kind(const Utility& u) {
  return std::visit(
      overloaded{[](const LinearUtility&) { return std::string("linear"); },
                 [](const TableUtility&) { return std::string("table"); },
                 [](const MarketUtility&) { return std::string("market"); },
                 [](const ThresholdUtility&) {
                   return std::string("threshold");
                 }},
      u);
}

double evaluate_utility(const Utility& u, int player, int action,
                        const Eigen::Ref<const Eigen::VectorXd>& s) {
  return std::visit(
      overloaded{
          [&](const LinearUtility& lin) {
            double v = lin.constant(player, action);
            for (std::size_t k = 0; k < lin.slope.size(); ++k) {
              v += lin.slope[k](player, action) * s(static_cast<Eigen::Index>(k));
            }
            return v;
          },
          [&](const TableUtility& t) {
            return eval_table(t, player * t.actions + action, s);
          },
          [&](const MarketUtility& mk) {
            return market::trader_payoff(mk.valuations(player, action), action,
                                         s, mk.lambda);
          },
          [&](const ThresholdUtility& th) {
            if (action != 0) return 0.0;
            return std::clamp(
                th.weights(player) * (s(0) - th.thresholds(player)) / 2.0,
                -1.0, 1.0);
          }},
      u);
}

void validate_utility(const Utility& u, int n, int m, int d, double W) {
  std::visit(overloaded{[&](const LinearUtility& x) {
                          validate_linear(x, n, m, d, W);
                        },
                        [&](const TableUtility& x) {
                          validate_table(x, n, m, d);
                        },
                        [&](const MarketUtility& x) {
                          validate_market(x, n, m, d);
                        },
                        [&](const ThresholdUtility& x) {
                          validate_threshold(x, n, m, d);
                        }},
             u);
}

}  // namespace aggpriv
