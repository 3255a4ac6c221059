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

#include <stdexcept>
#include <string>

namespace aggpriv {

// Invalid argument to an operation (bad scale, empty set, out-of-range type).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation is not legal in the object's current state.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Numerical degeneracy, e.g. projecting weights that vanish on the support.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A run was refused because its grid or enumeration exceeds the budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that should be unreachable was violated.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aggpriv
