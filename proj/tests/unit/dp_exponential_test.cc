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

#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "aggpriv/dp/exponential_mechanism.h"
#include "aggpriv/dp/noise_source.h"
#include "aggpriv/errors.h"

namespace aggpriv {
namespace {

TEST(Exponential, EqualScoresAreFair) {
  NoiseSource src(5);
  const std::vector<double> scores{1.0, 1.0};
  int first = 0;
  const int draws = 100000;
  for (int t = 0; t < draws; ++t) {
    if (exponential_mechanism(scores, 1.0, 1.0, src) == 0) ++first;
  }
  EXPECT_NEAR(static_cast<double>(first) / draws, 0.5, 0.01);
}

TEST(Exponential, ProbabilityRatio) {
  NoiseSource src(6);
  const std::vector<double> scores{0.0, 1.0};
  int high = 0;
  const int draws = 100000;
  for (int t = 0; t < draws; ++t) {
    if (exponential_mechanism(scores, 1.0, 2.0, src) == 1) ++high;
  }
  const double ratio = static_cast<double>(high) / (draws - high);
  EXPECT_NEAR(ratio, std::exp(1.0), 0.03 * std::exp(1.0));
  const auto p = exponential_mechanism_probabilities(scores, 1.0, 2.0);
  EXPECT_NEAR(p[1] / p[0], std::exp(1.0), 1e-12);
}

TEST(Exponential, NoiseOffFirstArgmax) {
  NoiseSource src(1, NoiseMode::kNoiseOff);
  const std::vector<double> scores{3.0, 7.0, 7.0};
  EXPECT_EQ(exponential_mechanism(scores, 1.0, 1.0, src), 1u);
}

TEST(Exponential, EmptySetRejected) {
  NoiseSource src(1);
  const std::vector<double> scores;
  EXPECT_THROW(exponential_mechanism(scores, 1.0, 1.0, src), ParameterError);
}

TEST(Exponential, HugeScoresStable) {
  const std::vector<double> scores{1e6, 1e6 - 1.0};
  const auto p = exponential_mechanism_probabilities(scores, 1.0, 2.0);
  EXPECT_NEAR(p[0] + p[1], 1.0, 1e-12);
  EXPECT_NEAR(p[0] / p[1], std::exp(1.0), 1e-9);
}

TEST(Exponential, ScoredOutcomeSet) {
  ScoredOutcomeSet<std::string> set{{"a", "b", "c"}, {0.0, 5.0, 1.0}, 1.0};
  NoiseSource src(1, NoiseMode::kNoiseOff);
  EXPECT_EQ(exponential_mechanism(set, 1.0, src), "b");
}

TEST(ExponentialAccuracy, Formula) {
  EXPECT_DOUBLE_EQ(exp_mechanism_accuracy_bound(std::size_t{1}, 1.0, 1.0, 1.0),
                   0.0);
  EXPECT_NEAR(exp_mechanism_accuracy_bound(std::exp(1.0), 1.0, 1.0, 1.0), 2.0,
              1e-12);
  EXPECT_NEAR(exp_mechanism_accuracy_bound(std::size_t{100}, 0.5, 2.0, 0.01),
              0.5 * std::log(1e4), 1e-12);
}

}  // namespace
}  // namespace aggpriv
