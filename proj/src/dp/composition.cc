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

#include "aggpriv/dp/composition.h"

#include <cmath>
#include <utility>

#include "aggpriv/errors.h"

namespace aggpriv {

void PrivacyLedger::add(std::string label, double epsilon, double delta) {
  if (!(epsilon >= 0.0) || !(delta >= 0.0)) {
    throw ParameterError("privacy ledger: negative epsilon or delta");
  }
  entries_.push_back({std::move(label), epsilon, delta});
}

void PrivacyLedger::add_repeated(std::string label, double epsilon,
                                 double delta, int count) {
  for (int t = 0; t < count; ++t) add(label, epsilon, delta);
}

bool PrivacyLedger::homogeneous() const {
  for (const auto& e : entries_) {
    if (e.epsilon != entries_.front().epsilon ||
        e.delta != entries_.front().delta) {
      return false;
    }
  }
  return true;
}

PrivacyTotals compose_adaptive(const PrivacyLedger& ledger,
                               double delta_prime) {
  if (!(delta_prime > 0.0 && delta_prime < 1.0)) {
    throw ParameterError("compose_adaptive: delta' must lie in (0, 1)");
  }
  PrivacyTotals totals;
  if (ledger.empty()) return totals;
  if (ledger.homogeneous()) {
    const double t = static_cast<double>(ledger.size());
    const double eps = ledger.entries().front().epsilon;
    const double delta = ledger.entries().front().delta;
    totals.epsilon = eps * std::sqrt(2.0 * t * std::log(1.0 / delta_prime)) +
                     t * eps * std::expm1(eps);
    totals.delta = t * delta + delta_prime;
    totals.advanced = true;
    return totals;
  }
  for (const auto& e : ledger.entries()) {
    totals.epsilon += e.epsilon;
    totals.delta += e.delta;
  }
  return totals;
}

}  // namespace aggpriv
