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

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"
#include "aggpriv/game/json_io.h"
#include "aggpriv/harness/deviation.h"
#include "aggpriv/harness/experiment.h"
#include "aggpriv/harness/generators.h"
#include "aggpriv/lp/distmw.h"
#include "aggpriv/market/market_game.h"
#include "aggpriv/market/pricing.h"

using nlohmann::json;
using namespace aggpriv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAbort = 2;

std::string resolve_out(const std::string& out, const std::string& name) {
  if (!out.empty()) return out;
  if (const char* dir = std::getenv("AGGPRIV_OUT_DIR")) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / (name + ".json")).string();
  }
  return {};
}

void emit(const json& j, const std::string& out, const std::string& name) {
  const std::string path = resolve_out(out, name);
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(j, path);
  }
}

FeasibilityLP lp_from_json(const json& j) {
  FeasibilityLP lp;
  lp.n = j.at("n").get<int>();
  lp.m = j.at("m").get<int>();
  lp.gamma = j.at("gamma").get<double>();
  for (const auto& c : j.at("constraints")) {
    lp.constraints.push_back({matrix_from_json(c.at("f")), c.at("b").get<double>()});
  }
  lp.supports = j.at("supports").get<std::vector<std::vector<int>>>();
  lp.validate();
  return lp;
}

struct AlgoFlags {
  std::string game;
  std::string out;
  std::uint64_t seed = 0;
  AlgorithmSpec spec;
};

void add_algo_flags(CLI::App* cmd, AlgoFlags& f, bool privacy, bool zeta,
                    bool quality) {
  cmd->add_option("--game", f.game, "game JSON file")->required();
  cmd->add_option("--out", f.out, "result JSON path");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--alpha", f.spec.alpha, "accuracy parameter (0 = derived)");
  cmd->add_option("--beta", f.spec.beta, "failure probability");
  cmd->add_option("--grid-budget", f.spec.grid_budget, "grid point budget");
  if (zeta) cmd->add_option("--zeta", f.spec.zeta, "comparator class");
  if (privacy) {
    cmd->add_option("--eps", f.spec.epsilon, "privacy parameter epsilon");
    cmd->add_option("--delta", f.spec.delta, "privacy parameter delta (0 = 1/n)");
    cmd->add_flag("--no-noise", f.spec.no_noise, "disable all privacy noise");
    cmd->add_option("--threads", f.spec.threads, "worker threads");
  }
  if (quality) cmd->add_option("--quality", f.spec.quality, "linear | table:<file>");
}

int run_algo(const std::string& name, AlgoFlags& f) {
  f.spec.algorithm = name;
  const AggregativeGame game = read_game_file(f.game);
  TrialOutcome t = run_algorithm(game, f.spec, f.seed);
  t.result["game"] = f.game;
  emit(t.result, f.out, name);
  return t.abort ? kExitAbort : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private equilibrium computation for aggregative games"};
  app.require_subcommand(1);

  // gen-game
  auto* gen = app.add_subcommand("gen-game", "generate a random game");
  std::string gen_kind = "linear";
  int gen_n = 10, gen_m = 2, gen_d = 1;
  double gen_lambda = 10.0, gen_anti = 0.0;
  bool gen_no_loss = false;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "linear | threshold | market | anonymous");
  gen->add_option("--n", gen_n, "players");
  gen->add_option("--m", gen_m, "actions");
  gen->add_option("--d", gen_d, "aggregator dimension");
  gen->add_option("--lambda", gen_lambda, "market slope");
  gen->add_option("--anti-fraction", gen_anti, "share of negative weights");
  gen->add_flag("--no-loss", gen_no_loss, "omit the loss table");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output path");
  bool gen_market_format = false;
  gen->add_flag("--market-format", gen_market_format,
                "write the market JSON format (kind market only)");

  AlgoFlags presl_f, npresl_f, psn_f, sel_f;
  add_algo_flags(app.add_subcommand("presl", "private equilibrium selection"),
                 presl_f, true, true, false);
  add_algo_flags(app.add_subcommand("npresl", "non-private equilibrium selection"),
                 npresl_f, false, true, false);
  add_algo_flags(app.add_subcommand("psummnash", "private 1-d equilibrium"),
                 psn_f, true, false, false);
  add_algo_flags(app.add_subcommand("select", "quality-ordered 1-d selection"),
                 sel_f, true, true, true);

  // market-sim
  auto* msim = app.add_subcommand("market-sim", "run PRESL on a market");
  std::string market_file;
  AlgoFlags mk;
  msim->add_option("--market", market_file, "market JSON file")->required();
  msim->add_option("--out", mk.out, "result JSON path");
  msim->add_option("--seed", mk.seed, "random seed");
  msim->add_option("--zeta", mk.spec.zeta, "comparator class");
  msim->add_option("--eps", mk.spec.epsilon, "privacy parameter epsilon");
  msim->add_option("--delta", mk.spec.delta, "privacy parameter delta");
  msim->add_option("--beta", mk.spec.beta, "failure probability");
  msim->add_option("--alpha", mk.spec.alpha, "accuracy parameter (0 = derived)");
  msim->add_option("--grid-budget", mk.spec.grid_budget, "grid point budget");
  msim->add_flag("--no-noise", mk.spec.no_noise, "disable all privacy noise");

  // distmw-solve
  auto* dmw = app.add_subcommand("distmw-solve", "solve a feasibility LP");
  std::string lp_file, dmw_out;
  DistMWParams dmw_params;
  std::uint64_t dmw_seed = 0;
  bool dmw_no_noise = false;
  dmw->add_option("--lp", lp_file, "LP JSON file")->required();
  dmw->add_option("--eps", dmw_params.epsilon, "epsilon");
  dmw->add_option("--delta", dmw_params.delta, "delta");
  dmw->add_option("--alpha", dmw_params.alpha, "target accuracy");
  dmw->add_option("--beta", dmw_params.beta, "failure probability");
  dmw->add_option("--threads", dmw_params.threads, "worker threads");
  dmw->add_option("--seed", dmw_seed, "random seed");
  dmw->add_option("--out", dmw_out, "output path");
  dmw->add_flag("--no-noise", dmw_no_noise, "exact constraint selection");

  // verify
  auto* ver = app.add_subcommand("verify", "regret report of a profile");
  std::string ver_game, ver_profile, ver_out;
  double ver_eta = -1.0;
  ver->add_option("--game", ver_game, "game JSON file")->required();
  ver->add_option("--profile", ver_profile,
                  "JSON file holding a profile array or a result with 'profile'")
      ->required();
  ver->add_option("--eta", ver_eta, "fail (exit 1) when regret exceeds eta");
  ver->add_option("--out", ver_out, "output path");

  // deviate
  auto* dev = app.add_subcommand("deviate", "truthfulness deviation test");
  std::string dev_spec_file, dev_out;
  std::uint64_t dev_seed = 0;
  bool dev_no_noise = false;
  int dev_runs = -1;
  dev->add_option("--spec", dev_spec_file,
                  "JSON {thresholds, weights, player, misreport_threshold, "
                  "misreport_weight, epsilon, alpha, beta, runs}")
      ->required();
  dev->add_option("--seed", dev_seed, "random seed");
  dev->add_option("--runs", dev_runs, "repetitions (overrides the spec)");
  dev->add_flag("--no-noise", dev_no_noise, "disable all privacy noise");
  dev->add_option("--out", dev_out, "output path");

  // bench
  auto* bench = app.add_subcommand("bench", "run a batch of seeded trials");
  std::string bench_config;
  AlgoFlags bf;
  std::string bench_gen, bench_csv, bench_json;
  int bench_trials = -1, bench_workers = -1;
  bool bench_no_timing = false;
  bench->add_option("--config", bench_config, "experiment JSON config");
  bench->add_option("--algorithm", bf.spec.algorithm, "algorithm");
  bench->add_option("--game", bf.game, "game JSON file");
  bench->add_option("--generate", bench_gen, "generator spec as JSON text");
  bench->add_option("--trials", bench_trials, "trial count");
  bench->add_option("--seed", bf.seed, "base seed");
  bench->add_option("--zeta", bf.spec.zeta, "comparator class");
  bench->add_option("--eps", bf.spec.epsilon, "epsilon");
  bench->add_option("--delta", bf.spec.delta, "delta");
  bench->add_option("--alpha", bf.spec.alpha, "alpha");
  bench->add_option("--beta", bf.spec.beta, "beta");
  bench->add_option("--quality", bf.spec.quality, "quality function");
  bench->add_flag("--no-noise", bf.spec.no_noise, "disable all privacy noise");
  bench->add_option("--csv", bench_csv, "CSV output path");
  bench->add_option("--out", bench_json, "JSON summary path");
  bench->add_option("--workers", bench_workers, "parallel trials");
  bench->add_flag("--no-timing", bench_no_timing, "write time_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (gen->parsed()) {
      if (gen_kind == "market" && gen_market_format) {
        emit(market::market_to_json(generate_market(gen_n, gen_d, gen_lambda, gen_seed)),
             gen_out, "game");
        return kExitOk;
      }
      const json spec = {{"kind", gen_kind}, {"n", gen_n},
                         {"m", gen_m},       {"d", gen_d},
                         {"lambda", gen_lambda},
                         {"anti_fraction", gen_anti},
                         {"loss", !gen_no_loss}};
      emit(game_to_json(generate(spec, gen_seed)), gen_out, "game");
      return kExitOk;
    }
    for (auto& [name, flags] :
         std::vector<std::pair<std::string, AlgoFlags*>>{{"presl", &presl_f},
                                                         {"npresl", &npresl_f},
                                                         {"psummnash", &psn_f},
                                                         {"select", &sel_f}}) {
      if (app.got_subcommand(name)) return run_algo(name, *flags);
    }
    if (msim->parsed()) {
      const market::MarketGame mg = market::market_from_json(read_json_file(market_file));
      const AggregativeGame game = market::to_aggregative(mg);
      mk.spec.algorithm = "presl";
      TrialOutcome t = run_algorithm(game, mk.spec, mk.seed);
      t.result["market"] = market_file;
      t.result["corollary_eta"] = market::corollary_eta(mg.n(), mg.lambda(), mg.d());
      t.result["market_zeta"] = market::market_zeta(mg.n(), mg.d(), mg.lambda());
      if (!t.abort) {
        const Eigen::VectorXd I = market::imbalance(mg, t.profile);
        const auto loss = market::market_maker_loss(mg, t.profile);
        int active = 0;
        for (int a : t.profile) {
          if (market::portfolio_vector(a, mg.d()).cwiseAbs().sum() > 0.0) ++active;
        }
        t.result["imbalance"] = vector_to_json(I);
        t.result["prices"] = vector_to_json(market::hinge_price(I, mg.lambda()));
        t.result["participation"] = static_cast<double>(active) / mg.n();
        t.result["market_maker_loss"] = {
            {"per_security", vector_to_json(loss.per_security)},
            {"total", loss.total},
            {"bound", mg.d() * mg.lambda() / 16.0}};
      }
      emit(t.result, mk.out, "market-sim");
      return t.abort ? kExitAbort : kExitOk;
    }
    if (dmw->parsed()) {
      const FeasibilityLP lp = lp_from_json(read_json_file(lp_file));
      NoiseSource src(dmw_seed, dmw_no_noise ? NoiseMode::kNoiseOff : NoiseMode::kNoisy);
      const DistMWResult r = distmw_solve(lp, dmw_params, src);
      emit({{"p_bar", matrix_to_json(r.p_bar)},
            {"transcript", r.transcript},
            {"rounds", r.schedule.rounds},
            {"epsilon0", r.schedule.epsilon0},
            {"eta", r.schedule.eta},
            {"max_violation", max_violation(lp, r.p_bar)},
            {"respects_supports", respects_supports(lp, r.p_bar, 1e-9)},
            {"average_regret", vector_to_json(r.average_regret)},
            {"regret_bound", r.regret_bound},
            {"transcript_digest", transcript_digest(json(r.transcript))}},
           dmw_out, "distmw-solve");
      return kExitOk;
    }
    if (ver->parsed()) {
      const AggregativeGame game = read_game_file(ver_game);
      const json pj = read_json_file(ver_profile);
      const PureProfile x =
          (pj.is_object() ? pj.at("profile") : pj).get<PureProfile>();
      const RegretReport r = regret(game, x);
      const Eigen::VectorXd s = aggregator(game, x);
      const TranslationReport tr = translate_checks(game, x, s);
      emit({{"max_regret", r.max},
            {"per_player", vector_to_json(r.per_player)},
            {"aggregator", vector_to_json(s)},
            {"loss", profile_loss(game, x)},
            {"gamma_eff", game.gamma_eff()},
            {"abr_regret", vector_to_json(tr.abr_regret)},
            {"translation_ok", tr.ok()}},
           ver_out, "verify");
      if (ver_eta >= 0.0 && r.max > ver_eta) return kExitError;
      return kExitOk;
    }
    if (dev->parsed()) {
      const json j = read_json_file(dev_spec_file);
      DeviationSpec spec;
      spec.thresholds = j.at("thresholds").get<std::vector<double>>();
      spec.weights = j.contains("weights")
                         ? j["weights"].get<std::vector<double>>()
                         : std::vector<double>(spec.thresholds.size(), 1.0);
      spec.player = j.value("player", 0);
      spec.misreport_threshold = j.at("misreport_threshold").get<double>();
      spec.misreport_weight = j.value("misreport_weight", 1.0);
      spec.psn.epsilon = j.value("epsilon", 1.0);
      spec.psn.alpha = j.value("alpha", 0.0);
      spec.psn.beta = j.value("beta", 0.05);
      spec.runs = dev_runs > 0 ? dev_runs : j.value("runs", 200);
      spec.seed = dev_seed;
      spec.no_noise = dev_no_noise;
      const DeviationReport r = deviation_test(spec);
      emit({{"spec", j},
            {"seed", dev_seed},
            {"runs", r.runs},
            {"aborts", r.aborts},
            {"mean_gain", r.mean_gain},
            {"std_error", r.std_error},
            {"max_gain", r.max_gain},
            {"alpha", r.alpha},
            {"eta", r.eta},
            {"common_random_numbers", true}},
           dev_out, "deviate");
      return kExitOk;
    }
    if (bench->parsed()) {
      ExperimentConfig cfg;
      if (!bench_config.empty()) cfg = config_from_json(read_json_file(bench_config));
      if (!bench_config.empty() && bf.seed == 0) bf.seed = cfg.seed;
      cfg.seed = bf.seed;
      if (bench_config.empty()) {
        cfg.algorithm = bf.spec;
        if (!bf.game.empty()) {
          cfg.game_source = {{"file", bf.game}};
        } else if (!bench_gen.empty()) {
          cfg.game_source = {{"generate", json::parse(bench_gen)}};
        } else {
          throw ParameterError("bench: need --config, --game or --generate");
        }
      }
      if (bench_trials >= 0) cfg.trials = bench_trials;
      if (bench_workers > 0) cfg.threads = bench_workers;
      if (!bench_csv.empty()) cfg.csv_path = bench_csv;
      if (!bench_json.empty()) cfg.json_path = bench_json;
      if (bench_no_timing) cfg.timing = false;
      if (cfg.json_path.empty()) cfg.json_path = resolve_out("", "bench");
      const ExperimentSummary s = run_experiment(cfg);
      if (cfg.json_path.empty()) {
        std::cout << json{{"trials", cfg.trials},
                          {"aborts", s.aborts},
                          {"violations", s.violations},
                          {"failure_rate", s.failure_rate}}
                         .dump(2)
                  << '\n';
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
