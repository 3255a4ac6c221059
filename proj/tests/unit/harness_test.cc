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
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "aggpriv/dp/noise_source.h"
#include "aggpriv/errors.h"
#include "aggpriv/game/game_ops.h"
#include "aggpriv/game/json_io.h"
#include "aggpriv/harness/brute_force.h"
#include "aggpriv/harness/deviation.h"
#include "aggpriv/harness/experiment.h"
#include "aggpriv/harness/generators.h"
#include "aggpriv/onedim/psummnash.h"
#include "test_games.h"

namespace aggpriv {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "aggpriv_harness_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(BruteForce, ConstantGameAllProfiles) {
  const AggregativeGame g = testing::constant_game(3, 3, 1, 1.0 / 3);
  const auto all = brute_force_equilibria(g, 0.0);
  EXPECT_EQ(all.size(), 27u);
  for (const auto& e : all) EXPECT_EQ(e.regret, 0.0);
}

TEST(BruteForce, TwoPlayerHandTable) {
  // Anti-coordination: acting pays 0.4 - s / 2, staying out pays 0, and each
  // actor adds 1/2 to s.
  Eigen::MatrixXd F(2, 2), c(2, 2), w(2, 2);
  F << 1, 0, 1, 0;
  c << 0.4, 0.0, 0.4, 0.0;
  w << -0.5, 0.0, -0.5, 0.0;
  const AggregativeGame g = testing::linear_game(0.5, 1.0, {F}, c, {w});
  // (act, act): s = 1, each earns -0.1 and gains 0.1 by leaving.
  // (act, out) and (out, act): nobody gains.
  // (out, out): s = 0, acting alone earns 0.15.
  std::map<PureProfile, double> expected{
      {{0, 0}, 0.1}, {{0, 1}, 0.0}, {{1, 0}, 0.0}, {{1, 1}, 0.15}};
  const auto all = enumerate_profiles(g);
  ASSERT_EQ(all.size(), 4u);
  for (const auto& p : all) EXPECT_NEAR(p.regret, expected.at(p.profile), 1e-15);
  const auto eq = brute_force_equilibria(g, 0.0);
  ASSERT_EQ(eq.size(), 2u);
  for (const auto& e : eq) EXPECT_EQ(expected.at(e.profile), 0.0);
}

TEST(BruteForce, AgreesWithRegret) {
  const AggregativeGame g = generate_linear(5, 3, 2, 4);
  for (const auto& p : enumerate_profiles(g)) {
    EXPECT_EQ(p.regret, regret(g, p.profile).max);
  }
}

TEST(BruteForce, BudgetRefusal) {
  const AggregativeGame g = generate_linear(21, 2, 1, 4);
  EXPECT_THROW(enumerate_profiles(g), BudgetError);
}

TEST(BruteForce, OptLowerBoundsAlgorithms) {
  const AggregativeGame g = generate_linear(5, 2, 1, 13);
  const double zeta = 0.2;
  const auto opt = brute_force_opt_loss(g, zeta);
  ASSERT_TRUE(opt.has_value());
  for (const auto& e : brute_force_equilibria(g, zeta)) {
    EXPECT_GE(profile_loss(g, e.profile), *opt);
  }
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(game_to_json(generate_linear(4, 3, 2, 7)).dump(),
            game_to_json(generate_linear(4, 3, 2, 7)).dump());
  EXPECT_NE(game_to_json(generate_linear(4, 3, 2, 7)).dump(),
            game_to_json(generate_linear(4, 3, 2, 8)).dump());
}

TEST(Generators, ThresholdKindDelegates) {
  const QuasiAggregativeGame q = generate_threshold(6, 11);
  const auto& u = std::get<ThresholdUtility>(q.base().utility());
  std::vector<double> th(u.thresholds.data(), u.thresholds.data() + 6);
  const QuasiAggregativeGame ref = make_optin_game(th);
  EXPECT_EQ(q.base().influence(0), ref.base().influence(0));
  EXPECT_EQ(game_to_json(generate({{"kind", "threshold"}, {"n", 6}}, 11)).dump(),
            game_to_json(q.base()).dump());
}

TEST(Generators, LinearPassesValidation) {
  NoiseSource src(1);
  for (int t = 0; t < 10; ++t) {
    const AggregativeGame g = generate_linear(8, 2, 1, t);
    EXPECT_LE(sampled_lipschitz(g, src, 500), 1.0 + 1e-9);
  }
}

TEST(Generators, AnonymousCountsShares) {
  const AggregativeGame g = generate_anonymous(6, 3, 2);
  ASSERT_EQ(g.d(), 3);
  const PureProfile x{0, 2, 2, 1, 2, 0};
  const Eigen::VectorXd s = aggregator(g, x);
  EXPECT_NEAR(s(0), 2 * g.gamma(), 1e-15);
  EXPECT_NEAR(s(1), 1 * g.gamma(), 1e-15);
  EXPECT_NEAR(s(2), 3 * g.gamma(), 1e-15);
  EXPECT_THROW(generate({{"kind", "nope"}}, 1), ParameterError);
}

TEST(Deviation, TruthfulReportGainsNothing) {
  DeviationSpec spec;
  NoiseSource src(1);
  for (int i = 0; i < 50; ++i) spec.thresholds.push_back(src.uniform());
  spec.weights.assign(50, 1.0);
  spec.player = 3;
  spec.misreport_threshold = spec.thresholds[3];
  spec.psn.epsilon = 20.0;
  spec.runs = 20;
  const DeviationReport r = deviation_test(spec);
  for (double g : r.gains) EXPECT_EQ(g, 0.0);
}

TEST(Deviation, IndifferentPlayerGainsNothing) {
  DeviationSpec spec;
  spec.thresholds.assign(30, 0.5);
  spec.weights.assign(30, 1.0);
  spec.weights[0] = 0.0;  // constant utility for player 0
  spec.player = 0;
  spec.misreport_threshold = 0.0;
  spec.misreport_weight = 1.0;
  spec.psn.epsilon = 20.0;
  spec.runs = 20;
  const DeviationReport r = deviation_test(spec);
  for (double g : r.gains) EXPECT_EQ(g, 0.0);
}

TEST(Deviation, MeanGainWithinEta) {
  DeviationSpec spec;
  NoiseSource src(3);
  for (int i = 0; i < 100; ++i) spec.thresholds.push_back(src.uniform());
  spec.weights.assign(100, 1.0);
  spec.player = 7;
  spec.misreport_threshold = 1.0 - spec.thresholds[7];
  spec.psn.epsilon = 5.0;
  spec.runs = 200;
  const DeviationReport r = deviation_test(spec);
  EXPECT_NEAR(r.eta, mediated_eta(r.alpha, 5.0, spec.psn.beta, 0.0), 1e-15);
  EXPECT_LE(r.mean_gain, r.eta + 2 * r.std_error);
}

TEST(Experiment, ZeroTrialsHeaderOnly) {
  ExperimentConfig c;
  c.algorithm.algorithm = "psummnash";
  c.game_source = {{"generate", {{"kind", "threshold"}, {"n", 50}}}};
  c.trials = 0;
  c.csv_path = scratch("zero.csv").string();
  run_experiment(c);
  EXPECT_EQ(slurp(c.csv_path), "seed,regret,bound,loss,quality,abort_flag,time_ms\n");
}

TEST(Experiment, ByteIdenticalReruns) {
  ExperimentConfig c;
  c.seed = 42;
  c.algorithm.algorithm = "psummnash";
  c.algorithm.epsilon = 10.0;
  c.game_source = {{"generate", {{"kind", "threshold"}, {"n", 200}, {"anti_fraction", 0.2}}}};
  c.trials = 12;
  c.timing = false;
  c.csv_path = scratch("a.csv").string();
  c.json_path = scratch("a.json").string();
  run_experiment(c);
  const std::string csv1 = slurp(c.csv_path), json1 = slurp(c.json_path);
  run_experiment(c);
  EXPECT_EQ(slurp(c.csv_path), csv1);
  EXPECT_EQ(slurp(c.json_path), json1);
  // Parallel trials change only the echoed thread count.
  c.threads = 3;
  run_experiment(c);
  EXPECT_EQ(slurp(c.csv_path), csv1);
  nlohmann::json parallel = nlohmann::json::parse(slurp(c.json_path));
  parallel["config"]["threads"] = 1;
  const nlohmann::json summary = nlohmann::json::parse(json1);
  EXPECT_EQ(parallel, summary);
  EXPECT_EQ(summary["config"]["seed"], 42);
  EXPECT_EQ(summary["transcript_digests"].size(), 12u);
}

TEST(Experiment, BoundColumnRecomputes) {
  ExperimentConfig c;
  c.seed = 5;
  c.algorithm.algorithm = "psummnash";
  c.algorithm.epsilon = 10.0;
  c.game_source = {{"generate", {{"kind", "threshold"}, {"n", 300}}}};
  c.trials = 5;
  const ExperimentSummary s = run_experiment(c);
  for (const auto& t : s.trials) {
    const QuasiAggregativeGame g(generate(c.game_source["generate"], t.seed));
    const double alpha =
        onedim_alpha_bound(g.gamma(), g.W(), g.n(), c.algorithm.beta, 10.0, 6.0);
    EXPECT_NEAR(t.bound, 10 * alpha + 2 * g.gamma_eff(), 1e-12);
  }
}

TEST(Experiment, PsummnashBatchFailureRate) {
  ExperimentConfig c;
  c.seed = 8;
  c.algorithm.algorithm = "psummnash";
  c.algorithm.epsilon = 10.0;
  c.game_source = {{"generate", {{"kind", "threshold"}, {"n", 500}, {"anti_fraction", 0.1}}}};
  c.trials = 50;
  const ExperimentSummary s = run_experiment(c);
  EXPECT_LE(s.failure_rate, c.algorithm.beta + 0.05);
}

TEST(Experiment, ConfigRoundTrip) {
  ExperimentConfig c;
  c.seed = 9;
  c.algorithm.algorithm = "select";
  c.algorithm.zeta = 0.3;
  c.algorithm.quality = "linear";
  c.game_source = {{"file", "g.json"}};
  c.trials = 3;
  const ExperimentConfig d = config_from_json(config_to_json(c));
  EXPECT_EQ(config_to_json(d).dump(), config_to_json(c).dump());
  const AlgorithmSpec sp = spec_from_json(spec_to_json(c.algorithm));
  EXPECT_EQ(spec_to_json(sp).dump(), spec_to_json(c.algorithm).dump());
}

TEST(Experiment, RunAlgorithmAllKinds) {
  const AggregativeGame lin = generate_linear(5, 2, 1, 3);
  const AggregativeGame thr = generate_threshold(40, 3).base();
  for (const std::string algo : {"presl", "npresl", "psummnash", "select"}) {
    AlgorithmSpec spec;
    spec.algorithm = algo;
    spec.epsilon = 1e6;
    spec.zeta = 0.2;
    spec.no_noise = true;
    const AggregativeGame& g = (algo == "presl" || algo == "npresl") ? lin : thr;
    const TrialOutcome t = run_algorithm(g, spec, 1);
    EXPECT_FALSE(t.abort) << algo;
    EXPECT_LE(t.regret, t.bound) << algo;
    for (const char* key : {"algorithm", "spec", "seed", "params", "bounds", "transcript",
                            "profile", "regret", "loss", "aggregator", "status",
                            "transcript_digest"}) {
      EXPECT_TRUE(t.result.contains(key)) << algo << " " << key;
    }
    EXPECT_EQ(t.result.dump(), run_algorithm(g, spec, 1).result.dump());
  }
  AlgorithmSpec bad;
  bad.algorithm = "mystery";
  EXPECT_THROW(run_algorithm(lin, bad, 1), ParameterError);
}

TEST(Experiment, TranscriptDigest) {
  const std::string a = transcript_digest(nlohmann::json{{"x", 1}});
  EXPECT_EQ(a.size(), 16u);
  EXPECT_EQ(a, transcript_digest(nlohmann::json{{"x", 1}}));
  EXPECT_NE(a, transcript_digest(nlohmann::json{{"x", 2}}));
}

}  // namespace
}  // namespace aggpriv
