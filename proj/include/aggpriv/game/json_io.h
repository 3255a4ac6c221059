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

#include <Eigen/Dense>
#include <json.hpp>

#include "aggpriv/game/aggregative_game.h"

namespace aggpriv {

// {n, m, d, gamma, W, f[i][k][j], utility: {kind, params}, loss?}
nlohmann::json game_to_json(const AggregativeGame& game);
AggregativeGame game_from_json(const nlohmann::json& j);

AggregativeGame read_game_file(const std::string& path);
void write_game_file(const AggregativeGame& game, const std::string& path);

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Eigen::VectorXd& v);
Eigen::VectorXd vector_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
// Writes `j` with two-space indentation and a trailing newline.
void write_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace aggpriv
