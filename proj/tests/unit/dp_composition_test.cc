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

#include <gtest/gtest.h>

#include "aggpriv/dp/composition.h"
#include "aggpriv/errors.h"

namespace aggpriv {
namespace {

TEST(Composition, ZeroBudget) {
  PrivacyLedger ledger;
  ledger.add_repeated("round", 0.0, 0.0, 50);
  EXPECT_DOUBLE_EQ(compose_adaptive(ledger, 0.01).epsilon, 0.0);
}

TEST(Composition, SingleMechanism) {
  PrivacyLedger ledger;
  ledger.add("only", 0.1, 0.0);
  const PrivacyTotals t = compose_adaptive(ledger, 0.01);
  EXPECT_TRUE(t.advanced);
  EXPECT_NEAR(t.epsilon,
              0.1 * std::sqrt(2 * std::log(100.0)) + 0.1 * (std::exp(0.1) - 1),
              1e-12);
  EXPECT_NEAR(t.delta, 0.01, 1e-15);
}

TEST(Composition, HeterogeneousSums) {
  PrivacyLedger ledger;
  ledger.add("a", 0.1, 0.0);
  ledger.add("b", 0.2, 0.0);
  const PrivacyTotals t = compose_adaptive(ledger, 0.01);
  EXPECT_FALSE(t.advanced);
  EXPECT_NEAR(t.epsilon, 0.3, 1e-15);
  EXPECT_EQ(t.delta, 0.0);
}

TEST(Composition, MonotoneInEntries) {
  PrivacyLedger ledger;
  double last = 0.0;
  for (int t = 0; t < 20; ++t) {
    ledger.add("r", 0.05, 1e-6);
    const double eps = compose_adaptive(ledger, 1e-3).epsilon;
    EXPECT_GE(eps, last);
    last = eps;
  }
}

TEST(Composition, DeltaPrimeRange) {
  PrivacyLedger ledger;
  EXPECT_THROW(compose_adaptive(ledger, 0.0), ParameterError);
  EXPECT_THROW(compose_adaptive(ledger, 1.0), ParameterError);
  EXPECT_THROW(ledger.add("bad", -1.0), ParameterError);
}

}  // namespace
}  // namespace aggpriv
