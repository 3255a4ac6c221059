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

#include "aggpriv/game/json_io.h"

#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "aggpriv/errors.h"

namespace aggpriv {

using nlohmann::json;

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParameterError("json: expected a matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols) {
      throw ParameterError("json: ragged matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd vector_from_json(const json& j) {
  if (!j.is_array()) throw ParameterError("json: expected a vector");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = j[i].get<double>();
  return v;
}

namespace {

json utility_to_json(const Utility& u) {
  json params;
  if (const auto* lin = std::get_if<LinearUtility>(&u)) {
    params["c"] = matrix_to_json(lin->constant);
    // w[i][j][k]
    json w = json::array();
    const auto n = lin->constant.rows();
    const auto m = lin->constant.cols();
    for (Eigen::Index i = 0; i < n; ++i) {
      json wi = json::array();
      for (Eigen::Index a = 0; a < m; ++a) {
        json wij = json::array();
        for (const auto& S : lin->slope) wij.push_back(S(i, a));
        wi.push_back(std::move(wij));
      }
      w.push_back(std::move(wi));
    }
    params["w"] = std::move(w);
  } else if (const auto* t = std::get_if<TableUtility>(&u)) {
    params["lo"] = vector_to_json(t->lower);
    params["hi"] = vector_to_json(t->upper);
    params["points"] = t->points;
    params["actions"] = t->actions;
    params["values"] = matrix_to_json(t->values);
  } else if (const auto* mk = std::get_if<MarketUtility>(&u)) {
    params["lambda"] = mk->lambda;
    params["valuations"] = matrix_to_json(mk->valuations);
  } else if (const auto* th = std::get_if<ThresholdUtility>(&u)) {
    params["thresholds"] = vector_to_json(th->thresholds);
    params["weights"] = vector_to_json(th->weights);
  }
  return json{{"kind", utility_kind(u)}, {"params", std::move(params)}};
}

Utility utility_from_json(const json& j, int n, int m, int d) {
  const std::string kind = j.at("kind").get<std::string>();
  const json& p = j.at("params");
  if (kind == "linear") {
    LinearUtility lin;
    lin.constant = matrix_from_json(p.at("c"));
    const json& w = p.at("w");
    if (static_cast<int>(w.size()) != n) {
      throw ParameterError("json: linear w must have n rows");
    }
    lin.slope.assign(d, Eigen::MatrixXd::Zero(n, m));
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(w[i].size()) != m) {
        throw ParameterError("json: linear w[i] must have m entries");
      }
      for (int a = 0; a < m; ++a) {
        if (static_cast<int>(w[i][a].size()) != d) {
          throw ParameterError("json: linear w[i][j] must have d entries");
        }
        for (int k = 0; k < d; ++k) lin.slope[k](i, a) = w[i][a][k].get<double>();
      }
    }
    return lin;
  }
  if (kind == "table") {
    TableUtility t;
    t.lower = vector_from_json(p.at("lo"));
    t.upper = vector_from_json(p.at("hi"));
    t.points = p.at("points").get<std::vector<int>>();
    t.actions = p.value("actions", m);
    t.values = matrix_from_json(p.at("values"));
    return t;
  }
  if (kind == "market") {
    MarketUtility mk;
    mk.lambda = p.at("lambda").get<double>();
    mk.valuations = matrix_from_json(p.at("valuations"));
    return mk;
  }
  if (kind == "threshold") {
    ThresholdUtility th;
    th.thresholds = vector_from_json(p.at("thresholds"));
    th.weights = vector_from_json(p.at("weights"));
    return th;
  }
  throw ParameterError("json: unknown utility kind '" + kind + "'");
}

}  // namespace

json game_to_json(const AggregativeGame& game) {
  json f = json::array();
  for (int i = 0; i < game.n(); ++i) {
    json fi = json::array();
    for (int k = 0; k < game.d(); ++k) {
      json fik = json::array();
      for (int j = 0; j < game.m(); ++j) fik.push_back(game.f(i, k, j));
      fi.push_back(std::move(fik));
    }
    f.push_back(std::move(fi));
  }
  json out = {{"n", game.n()},         {"m", game.m()},
              {"d", game.d()},         {"gamma", game.gamma()},
              {"W", game.W()},         {"f", std::move(f)},
              {"utility", utility_to_json(game.utility())}};
  if (game.has_loss()) out["loss"] = matrix_to_json(game.loss());
  return out;
}

AggregativeGame game_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    const int d = j.at("d").get<int>();
    if (n < 1 || m < 1 || d < 1) throw ParameterError("json: bad dimensions");
    const json& f = j.at("f");
    if (static_cast<int>(f.size()) != n) {
      throw ParameterError("json: f must have n entries");
    }
    std::vector<Eigen::MatrixXd> F(d, Eigen::MatrixXd::Zero(n, m));
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(f[i].size()) != d) {
        throw ParameterError("json: f[i] must have d entries");
      }
      for (int k = 0; k < d; ++k) {
        if (static_cast<int>(f[i][k].size()) != m) {
          throw ParameterError("json: f[i][k] must have m entries");
        }
        for (int a = 0; a < m; ++a) F[k](i, a) = f[i][k][a].get<double>();
      }
    }
    std::optional<Eigen::MatrixXd> loss;
    if (j.contains("loss") && !j["loss"].is_null()) {
      loss = matrix_from_json(j["loss"]);
    }
    return AggregativeGame(n, m, d, j.at("gamma").get<double>(),
                           j.at("W").get<double>(), std::move(F),
                           utility_from_json(j.at("utility"), n, m, d),
                           std::move(loss));
  } catch (const json::exception& e) {
    throw ParameterError(std::string("json: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParameterError(path + ": " + e.what());
  }
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw ParameterError("write failed: " + path);
}

AggregativeGame read_game_file(const std::string& path) {
  return game_from_json(read_json_file(path));
}

void write_game_file(const AggregativeGame& game, const std::string& path) {
  write_json_file(game_to_json(game), path);
}

}  // namespace aggpriv
