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
#include <vector>

#include <json.hpp>

#include "aggpriv/game/aggregative_game.h"
#include "aggpriv/onedim/quasi_game.h"

namespace aggpriv {

struct AlgorithmSpec {
  std::string algorithm = "presl";  // presl, npresl, psummnash, select
  double zeta = 0.0;
  double epsilon = 1.0;
  double delta = 0.0;  // zero selects 1/n
  double alpha = 0.0;  // zero selects the algorithm's own choice
  double beta = 0.05;
  bool no_noise = false;
  int threads = 1;
  std::string quality = "linear";  // linear or table:<file>
  double grid_budget = 1e7;
};

nlohmann::json spec_to_json(const AlgorithmSpec& spec);
AlgorithmSpec spec_from_json(const nlohmann::json& j);

// linear -> q(s) = s; table:<file> reads {"xs": [...], "ys": [...]}.
QualityFn parse_quality(const std::string& text);

struct TrialOutcome {
  std::uint64_t seed = 0;
  bool abort = false;
  double regret = 0.0;
  double bound = 0.0;
  double loss = 0.0;
  double quality = 0.0;
  double time_ms = 0.0;
  PureProfile profile;
  // Result document; contains no timing.
  nlohmann::json result;
};

// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string transcript_digest(const nlohmann::json& transcript);

// Runs one algorithm on one game and verifies the output.
TrialOutcome run_algorithm(const AggregativeGame& game,
                           const AlgorithmSpec& spec, std::uint64_t seed);

struct ExperimentConfig {
  std::uint64_t seed = 0;
  AlgorithmSpec algorithm;
  // {"file": path} or {"generate": generator spec}; generated games are
  // redrawn per trial from the trial seed.
  nlohmann::json game_source;
  int trials = 1;
  std::string csv_path;
  std::string json_path;
  int threads = 1;
  bool timing = true;
};

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

struct ExperimentSummary {
  std::vector<TrialOutcome> trials;
  int aborts = 0;
  int violations = 0;  // regret above bound
  double failure_rate = 0.0;
};

// Trial t uses seed mix_seed(config.seed, t). Writes the CSV
// (seed,regret,bound,loss,quality,abort_flag,time_ms) and a JSON summary
// when the paths are set.
ExperimentSummary run_experiment(const ExperimentConfig& config);

std::string format_csv(const std::vector<TrialOutcome>& trials, bool timing);

}  // namespace aggpriv
