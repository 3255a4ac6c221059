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

#include <string>
#include <vector>

namespace aggpriv {

struct PrivacyEntry {
  std::string label;
  double epsilon = 0.0;
  double delta = 0.0;
};

// Bookkeeping of the (epsilon, delta) charges declared by an algorithm run.
class PrivacyLedger {
 public:
  void add(std::string label, double epsilon, double delta = 0.0);
  // Records `count` copies of the same mechanism.
  void add_repeated(std::string label, double epsilon, double delta,
                    int count);

  const std::vector<PrivacyEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  // True when every entry carries the same (epsilon, delta).
  bool homogeneous() const;

 private:
  std::vector<PrivacyEntry> entries_;
};

struct PrivacyTotals {
  double epsilon = 0.0;
  double delta = 0.0;
  bool advanced = false;  // true when the adaptive-composition branch was used
};

// Homogeneous ledgers of T entries (eps, delta) compose to
// (eps*sqrt(2T ln(1/delta')) + T*eps*(e^eps - 1), T*delta + delta');
// heterogeneous ledgers compose by summation.
PrivacyTotals compose_adaptive(const PrivacyLedger& ledger,
                               double delta_prime);

}  // namespace aggpriv
