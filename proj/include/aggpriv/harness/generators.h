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

#include <cstdint>
#include <string>

#include <json.hpp>

#include "aggpriv/game/aggregative_game.h"
#include "aggpriv/market/market_game.h"
#include "aggpriv/onedim/quasi_game.h"

namespace aggpriv {

// Linear utilities u = c + <w, s> with |c| <= 1/2, ||w||_1 <= 1/(2W),
// influence in [0, 1], gamma = 1/n and W = 1. Adds a uniform loss table
// when with_loss is set.
AggregativeGame generate_linear(int n, int m, int d, std::uint64_t seed,
                                bool with_loss = true);

// Participation game with thresholds uniform in [0, 1]. With
// `anti_fraction` > 0 that share of players gets negative weights.
QuasiAggregativeGame generate_threshold(int n, std::uint64_t seed,
                                        double anti_fraction = 0.0);

market::MarketGame generate_market(int n, int d, double lambda,
                                   std::uint64_t seed);

// d = m and f[i][k][j] = 1{j = k}: the aggregator is the vector of action
// shares. Linear utilities as in generate_linear.
AggregativeGame generate_anonymous(int n, int m, std::uint64_t seed);

// {"kind": linear|threshold|market|anonymous, "n", "m", "d", "lambda",
//  "anti_fraction", "loss"} with the seed; returns the game as an
// AggregativeGame (markets are converted).
AggregativeGame generate(const nlohmann::json& spec, std::uint64_t seed);

}  // namespace aggpriv
