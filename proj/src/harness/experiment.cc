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

#include "aggpriv/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"
#include "aggpriv/game/json_io.h"
#include "aggpriv/harness/generators.h"
#include "aggpriv/onedim/psummnash.h"
#include "aggpriv/onedim/selection.h"
#include "aggpriv/presl/presl.h"

namespace aggpriv {

using nlohmann::json;

namespace {

json profile_json(const PureProfile& x) { return json(x); }

json onedim_transcript_json(const OneDimTranscript& t) {
  return {{"branch", branch_name(t.branch)}, {"alpha", t.alpha},
          {"xi", t.xi},                      {"s", t.s},
          {"s_prev", t.s_prev},              {"walk_step", t.walk_step},
          {"queries", t.queries}};
}

void fill_common(const AggregativeGame& game, const PureProfile& x,
                 TrialOutcome& out) {
  const RegretReport r = regret(game, x);
  out.regret = r.max;
  out.loss = profile_loss(game, x);
  out.profile = x;
  out.result["profile"] = profile_json(x);
  out.result["regret"] = {{"max", r.max},
                          {"per_player", vector_to_json(r.per_player)}};
  out.result["loss"] = out.loss;
  out.result["aggregator"] = vector_to_json(aggregator(game, x));
}

void run_presl(const AggregativeGame& game, const AlgorithmSpec& spec,
               NoiseSource& src, TrialOutcome& out) {
  PreslConfig cfg;
  cfg.zeta = spec.zeta;
  cfg.epsilon = spec.epsilon;
  cfg.delta = spec.delta > 0.0 ? spec.delta : 1.0 / game.n();
  cfg.beta = spec.beta;
  if (spec.alpha > 0.0) cfg.alpha_override = spec.alpha;
  cfg.grid_budget = spec.grid_budget;
  cfg.threads = spec.threads;
  const PreslResult r = presl(game, cfg, src);
  const PreslParams& p = r.params;
  out.bound = spec.zeta + 12.0 * p.alpha;
  out.result["params"] = {{"E1", p.E1},         {"E2", p.E2},
                          {"alpha", p.alpha},   {"xi", p.xi},
                          {"delta", cfg.delta}, {"grid_x", p.x_size},
                          {"grid_y", p.y_size}, {"lp_tolerance", p.lp_tolerance}};
  out.result["bounds"] = {{"regret", out.bound}, {"loss_slack", 5.0 * p.alpha}};
  json t = {{"queries_answered", r.transcript.queries_answered},
            {"hit", r.transcript.hit ? json(*r.transcript.hit) : json(nullptr)}};
  if (r.transcript.hit) {
    t["noisy_answer"] = r.transcript.noisy_answer;
    t["s_hat"] = vector_to_json(r.transcript.s_hat);
    t["y_hat"] = r.transcript.y_hat;
    t["distmw"] = r.transcript.distmw;
    t["eta"] = r.transcript.eta;
    t["rounding_seed"] = r.transcript.rounding_seed;
  }
  out.result["transcript"] = t;
  if (r.status != RunStatus::kOk) {
    out.abort = true;
    return;
  }
  out.result["diagnostics"] = {{"hit_value", r.hit_value},
                               {"near_threshold", r.near_threshold},
                               {"stage2_violation", r.stage2_violation}};
  fill_common(game, r.profile, out);
}

void run_npresl(const AggregativeGame& game, const AlgorithmSpec& spec,
                NoiseSource& src, TrialOutcome& out) {
  NpreslConfig cfg;
  cfg.zeta = spec.zeta;
  cfg.alpha = spec.alpha > 0.0 ? spec.alpha : game.gamma();
  cfg.beta = spec.beta;
  cfg.grid_budget = spec.grid_budget;
  const NpreslResult r = npresl(game, cfg, src);
  out.bound = spec.zeta + 4.0 * cfg.alpha + 2.0 * game.gamma_eff() + 2.0 * r.E;
  out.result["params"] = {{"alpha", cfg.alpha}, {"xi", r.xi}, {"E", r.E}};
  out.result["bounds"] = {{"regret", out.bound}, {"loss_slack", r.E}};
  out.result["transcript"] = {{"s_hat", vector_to_json(r.s_hat)},
                              {"objective", r.objective},
                              {"feasible_points", r.feasible_points},
                              {"rounding_seed", r.rounding_seed}};
  fill_common(game, r.profile, out);
}

void run_psn(const AggregativeGame& game, const AlgorithmSpec& spec,
             NoiseSource& src, TrialOutcome& out) {
  const QuasiAggregativeGame q(game);
  PsnConfig cfg;
  cfg.epsilon = spec.epsilon;
  cfg.alpha = spec.alpha;
  cfg.beta = spec.beta;
  const PsnResult r = psummnash(q, cfg, src);
  out.bound = r.bound;
  out.result["params"] = {{"alpha", r.alpha}, {"W", r.W}, {"K", r.K}};
  out.result["bounds"] = {{"regret", r.bound}};
  out.result["transcript"] = onedim_transcript_json(r.transcript);
  out.result["diagnostics"] = {{"bracket_found", r.bracket_found}};
  if (r.status != RunStatus::kOk) {
    out.abort = true;
    return;
  }
  fill_common(game, r.profile, out);
}

void run_select(const AggregativeGame& game, const AlgorithmSpec& spec,
                NoiseSource& src, TrialOutcome& out) {
  const QuasiAggregativeGame q(game);
  const QualityFn quality = parse_quality(spec.quality);
  SelectionConfig cfg;
  cfg.zeta = spec.zeta;
  cfg.epsilon = spec.epsilon;
  cfg.alpha = spec.alpha;
  cfg.beta = spec.beta;
  const SelectionResult r = select_equilibrium(q, quality, cfg, src);
  out.bound = r.regret_bound;
  out.result["params"] = {{"alpha", r.params.alpha},
                          {"xi", r.params.xi},
                          {"W", r.params.W},
                          {"lambda", quality.lipschitz}};
  out.result["bounds"] = {{"regret", r.regret_bound},
                          {"quality_slack", r.quality_slack}};
  out.result["transcript"] = onedim_transcript_json(r.transcript);
  if (r.status != RunStatus::kOk) {
    out.abort = true;
    return;
  }
  fill_common(game, r.profile, out);
  out.quality = r.quality;
  out.result["quality"] = r.quality;
}

}  // namespace

json spec_to_json(const AlgorithmSpec& s) {
  return {{"algorithm", s.algorithm}, {"zeta", s.zeta},
          {"epsilon", s.epsilon},     {"delta", s.delta},
          {"alpha", s.alpha},         {"beta", s.beta},
          {"no_noise", s.no_noise},   {"threads", s.threads},
          {"quality", s.quality},     {"grid_budget", s.grid_budget}};
}

AlgorithmSpec spec_from_json(const json& j) {
  AlgorithmSpec s;
  s.algorithm = j.value("algorithm", s.algorithm);
  s.zeta = j.value("zeta", s.zeta);
  s.epsilon = j.value("epsilon", s.epsilon);
  s.delta = j.value("delta", s.delta);
  s.alpha = j.value("alpha", s.alpha);
  s.beta = j.value("beta", s.beta);
  s.no_noise = j.value("no_noise", s.no_noise);
  s.threads = j.value("threads", s.threads);
  s.quality = j.value("quality", s.quality);
  s.grid_budget = j.value("grid_budget", s.grid_budget);
  return s;
}

QualityFn parse_quality(const std::string& text) {
  if (text == "linear") return QualityFn::linear();
  if (text == "constant") return QualityFn::constant();
  const std::string prefix = "table:";
  if (text.rfind(prefix, 0) == 0) {
    const json j = read_json_file(text.substr(prefix.size()));
    return QualityFn::table(j.at("xs").get<std::vector<double>>(),
                            j.at("ys").get<std::vector<double>>());
  }
  throw ParameterError("quality: expected linear, constant or table:<file>");
}

std::string transcript_digest(const json& transcript) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : transcript.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TrialOutcome run_algorithm(const AggregativeGame& game,
                           const AlgorithmSpec& spec, std::uint64_t seed) {
  TrialOutcome out;
  out.seed = seed;
  NoiseSource src(seed, spec.no_noise ? NoiseMode::kNoiseOff : NoiseMode::kNoisy);
  out.result["algorithm"] = spec.algorithm;
  out.result["spec"] = spec_to_json(spec);
  out.result["seed"] = seed;
  const auto start = std::chrono::steady_clock::now();
  if (spec.algorithm == "presl") {
    run_presl(game, spec, src, out);
  } else if (spec.algorithm == "npresl") {
    run_npresl(game, spec, src, out);
  } else if (spec.algorithm == "psummnash") {
    run_psn(game, spec, src, out);
  } else if (spec.algorithm == "select") {
    run_select(game, spec, src, out);
  } else {
    throw ParameterError("unknown algorithm '" + spec.algorithm + "'");
  }
  out.time_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  out.result["status"] = out.abort ? "abort" : "ok";
  out.result["transcript_digest"] = transcript_digest(out.result["transcript"]);
  return out;
}

json config_to_json(const ExperimentConfig& c) {
  return {{"seed", c.seed},
          {"algorithm", spec_to_json(c.algorithm)},
          {"game_source", c.game_source},
          {"trials", c.trials},
          {"csv_path", c.csv_path},
          {"json_path", c.json_path},
          {"threads", c.threads},
          {"timing", c.timing}};
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  c.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("algorithm")) c.algorithm = spec_from_json(j["algorithm"]);
  c.game_source = j.value("game_source", json::object());
  c.trials = j.value("trials", 1);
  c.csv_path = j.value("csv_path", std::string());
  c.json_path = j.value("json_path", std::string());
  c.threads = j.value("threads", 1);
  c.timing = j.value("timing", true);
  return c;
}

std::string format_csv(const std::vector<TrialOutcome>& trials, bool timing) {
  std::ostringstream os;
  os.precision(17);
  os << "seed,regret,bound,loss,quality,abort_flag,time_ms\n";
  for (const auto& t : trials) {
    os << t.seed << ',' << t.regret << ',' << t.bound << ',' << t.loss << ','
       << t.quality << ',' << (t.abort ? 1 : 0) << ','
       << (timing ? t.time_ms : 0.0) << '\n';
  }
  return os.str();
}

ExperimentSummary run_experiment(const ExperimentConfig& config) {
  if (config.trials < 0) throw ParameterError("experiment: trials < 0");
  std::optional<AggregativeGame> fixed;
  const bool generated = config.game_source.contains("generate");
  if (!generated) {
    if (!config.game_source.contains("file")) {
      throw ParameterError("experiment: game_source needs file or generate");
    }
    fixed.emplace(read_game_file(config.game_source["file"].get<std::string>()));
  }
  ExperimentSummary sum;
  sum.trials.resize(config.trials);
  std::atomic<int> next{0};
  std::vector<std::string> errors(config.trials);
  auto work = [&]() {
    for (int t = next++; t < config.trials; t = next++) {
      const std::uint64_t seed =
          mix_seed(config.seed, static_cast<std::uint64_t>(t));
      try {
        if (generated) {
          const AggregativeGame g = generate(config.game_source["generate"], seed);
          sum.trials[t] = run_algorithm(g, config.algorithm, seed);
        } else {
          sum.trials[t] = run_algorithm(*fixed, config.algorithm, seed);
        }
      } catch (const std::exception& e) {
        errors[t] = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int threads = std::max(1, std::min(config.threads, config.trials));
    for (int w = 0; w < threads; ++w) pool.emplace_back(work);
  }
  for (int t = 0; t < config.trials; ++t) {
    if (!errors[t].empty()) {
      throw InternalError("experiment: trial " + std::to_string(t) + ": " +
                          errors[t]);
    }
  }
  for (const auto& t : sum.trials) {
    if (t.abort) {
      ++sum.aborts;
    } else if (t.regret > t.bound + 1e-9) {
      ++sum.violations;
    }
  }
  sum.failure_rate =
      config.trials ? static_cast<double>(sum.aborts + sum.violations) /
                          config.trials
                    : 0.0;
  if (!config.csv_path.empty()) {
    std::ofstream os(config.csv_path);
    if (!os) throw ParameterError("cannot write " + config.csv_path);
    os << format_csv(sum.trials, config.timing);
  }
  if (!config.json_path.empty()) {
    json digests = json::array();
    for (const auto& t : sum.trials) {
      digests.push_back(t.result.value("transcript_digest", std::string()));
    }
    write_json_file({{"config", config_to_json(config)},
                     {"trials", config.trials},
                     {"aborts", sum.aborts},
                     {"violations", sum.violations},
                     {"failure_rate", sum.failure_rate},
                     {"transcript_digests", digests}},
                    config.json_path);
  }
  return sum;
}

}  // namespace aggpriv
