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

#include "aggpriv/harness/generators.h"

#include <string>
#include <utility>
#include <vector>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/errors.h"

namespace aggpriv {
namespace {

double unit(NoiseSource& src) { return 2.0 * src.uniform() - 1.0; }

LinearUtility random_linear(int n, int m, int d, double W, NoiseSource& src) {
  LinearUtility u;
  u.constant.resize(n, m);
  u.slope.assign(d, Eigen::MatrixXd::Zero(n, m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      u.constant(i, j) = 0.5 * unit(src);
      Eigen::VectorXd w(d);
      for (int k = 0; k < d; ++k) w(k) = unit(src);
      const double l1 = w.cwiseAbs().sum();
      const double scale = l1 > 0.0 ? src.uniform() * 0.5 / (W * l1) : 0.0;
      for (int k = 0; k < d; ++k) {
        u.slope[k](i, j) = scale * w(k);
      }
    }
  }
  return u;
}

}  // namespace

AggregativeGame generate_linear(int n, int m, int d, std::uint64_t seed,
                                bool with_loss) {
  if (n < 1 || m < 1 || d < 1) throw ParameterError("generate: bad sizes");
  NoiseSource src(seed);
  std::vector<Eigen::MatrixXd> F(d, Eigen::MatrixXd::Zero(n, m));
  for (auto& f : F) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) f(i, j) = src.uniform();
    }
  }
  const double W = 1.0;
  LinearUtility u = random_linear(n, m, d, W, src);
  std::optional<Eigen::MatrixXd> loss;
  if (with_loss) {
    Eigen::MatrixXd l(n, m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) l(i, j) = src.uniform();
    }
    loss = std::move(l);
  }
  return AggregativeGame(n, m, d, 1.0 / n, W, std::move(F), std::move(u),
                         std::move(loss));
}

QuasiAggregativeGame generate_threshold(int n, std::uint64_t seed,
                                        double anti_fraction) {
  if (n < 1) throw ParameterError("generate: n must be positive");
  NoiseSource src(seed);
  std::vector<double> thresholds(n);
  std::vector<double> weights(n);
  for (int i = 0; i < n; ++i) {
    thresholds[i] = src.uniform();
    const bool anti = src.uniform() < anti_fraction;
    weights[i] = (anti ? -1.0 : 1.0) * (0.5 + 0.5 * src.uniform());
  }
  return make_threshold_game(thresholds, weights);
}

market::MarketGame generate_market(int n, int d, double lambda,
                                   std::uint64_t seed) {
  NoiseSource src(seed);
  return market::separable_market(n, d, lambda, src);
}

AggregativeGame generate_anonymous(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw ParameterError("generate: bad sizes");
  NoiseSource src(seed);
  std::vector<Eigen::MatrixXd> F(m, Eigen::MatrixXd::Zero(n, m));
  for (int k = 0; k < m; ++k) F[k].col(k).setOnes();
  LinearUtility u = random_linear(n, m, m, 1.0, src);
  return AggregativeGame(n, m, m, 1.0 / n, 1.0, std::move(F), std::move(u));
}

AggregativeGame generate(const nlohmann::json& spec, std::uint64_t seed) {
  const std::string kind = spec.value("kind", std::string("linear"));
  const int n = spec.value("n", 10);
  if (kind == "linear") {
    return generate_linear(n, spec.value("m", 2), spec.value("d", 1), seed,
                           spec.value("loss", true));
  }
  if (kind == "threshold") {
    return generate_threshold(n, seed, spec.value("anti_fraction", 0.0)).base();
  }
  if (kind == "market") {
    return market::to_aggregative(generate_market(
        n, spec.value("d", 1), spec.value("lambda", 10.0), seed));
  }
  if (kind == "anonymous") {
    return generate_anonymous(n, spec.value("m", 2), seed);
  }
  throw ParameterError("generate: unknown kind '" + kind + "'");
}

}  // namespace aggpriv
