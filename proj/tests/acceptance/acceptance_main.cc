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

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "aggpriv/dp/exponential_mechanism.h"
#include "aggpriv/dp/noise_source.h"
#include "aggpriv/dp/sparse_vector.h"
#include "aggpriv/game/game_ops.h"
#include "aggpriv/harness/brute_force.h"
#include "aggpriv/harness/generators.h"
#include "aggpriv/lp/distmw.h"
#include "aggpriv/lp/feasibility_lp.h"
#include "aggpriv/lp/structured_minimax.h"
#include "aggpriv/market/market_game.h"
#include "aggpriv/onedim/psummnash.h"
#include "aggpriv/onedim/quasi_game.h"
#include "aggpriv/onedim/selection.h"
#include "aggpriv/presl/presl.h"

namespace aggpriv {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, double a = 0, double b = 0, double c = 0,
                double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

// Translation lemmas on random games and profiles.
Outcome lemma_suite() {
  int violations = 0;
  double worst = -1e300;
  for (int t = 0; t < 1000; ++t) {
    NoiseSource src(mix_seed(1, t));
    const int n = 2 + t % 7;
    const int m = 2 + t % 2;
    const int d = 1 + t % 3;
    const AggregativeGame g = generate_linear(n, m, d, 10000 + t);
    const PureProfile x = random_profile(g, src);
    Eigen::VectorXd shifted = aggregator(g, x);
    for (int k = 0; k < d; ++k) shifted(k) += (2 * src.uniform() - 1) * g.gamma();
    const TranslationReport r = translate_checks(g, x, shifted, 1e-9);
    if (!r.ok()) ++violations;
    worst = std::max(worst, r.max_slack);
  }
  return {violations == 0,
          fmt("violations=%g over 1000 games, max slack %.3g", violations, worst)};
}

// Below-threshold accuracy at the stated bound.
Outcome sparse_accuracy() {
  const int N = 200;
  const double eps = 1.0, beta = 0.05, T = 0.0;
  const double alpha = sparse_accuracy_bound(1, 1.0, N, beta, eps);
  int bad = 0;
  for (int t = 0; t < 1000; ++t) {
    NoiseSource src(mix_seed(2, t));
    std::vector<double> q(N);
    for (double& v : q) v = T - alpha + 4 * alpha * src.uniform();
    SparseSession s(1.0, T, 1, eps, src);
    bool violated = false;
    for (int j = 0; j < N && !s.halted(); ++j) {
      const SparseAnswer a = s.answer(q[j]);
      if (a.below()) {
        violated = q[j] > T + alpha || std::abs(a.value - q[j]) > alpha;
      } else if (q[j] < T - alpha) {
        violated = true;
      }
      if (violated) break;
    }
    if (violated) ++bad;
  }
  const double rate = bad / 1000.0;
  return {rate <= beta + 0.02, fmt("violation rate %.3f (limit %.3f), alpha %.4f", rate,
                                   beta + 0.02, alpha)};
}

// Chi-square fit of sampled outcomes against the softmax law.
Outcome exp_distribution() {
  const int R = 10, samples = 100000;
  const double eps = 1.0, sens = 1.0;
  NoiseSource src(3);
  std::vector<double> scores(R);
  for (double& s : scores) s = 6 * src.uniform();
  std::vector<double> p(R);
  double z = 0;
  for (int r = 0; r < R; ++r) z += p[r] = std::exp(eps * scores[r] / (2 * sens));
  double gap = 0;
  const std::vector<double> lib = exponential_mechanism_probabilities(scores, sens, eps);
  for (int r = 0; r < R; ++r) {
    p[r] /= z;
    gap = std::max(gap, std::abs(p[r] - lib[r]));
  }
  std::vector<int> counts(R, 0);
  for (int k = 0; k < samples; ++k) ++counts[exponential_mechanism(scores, sens, eps, src)];
  double chi2 = 0;
  for (int r = 0; r < R; ++r) {
    const double e = samples * p[r];
    chi2 += (counts[r] - e) * (counts[r] - e) / e;
  }
  const double critical = 27.877;  // chi-square, 9 degrees of freedom, 0.001
  return {chi2 < critical && gap < 1e-12,
          fmt("chi2 %.2f (critical %.3f), max probability gap %.2g", chi2, critical, gap)};
}

// Stage-two style LP at the first grid point whose exact value is within alpha.
FeasibilityLP feasible_stage2_lp(const AggregativeGame& g, double eps) {
  PreslConfig c;
  c.epsilon = eps;
  c.delta = 1.0 / g.n();
  c.alpha_override = 0.05;
  const PreslParams p = make_presl_params(g, c);
  const QueryGrid grid(p);
  for (long long q = 0; q < grid.size(); ++q) {
    const Eigen::VectorXd s_hat = grid.s_hat(grid.x_index(q));
    const double y_hat = grid.y_hat(grid.y_index(q));
    if (exact_lp_min(g, s_hat, y_hat, p.xi, p.lp_tolerance).value <= p.alpha) {
      return presl_stage2_lp(g, p, s_hat, y_hat);
    }
  }
  return {};
}

Outcome distmw_accuracy() {
  const int n = 200, runs = 200;
  const double eps = 2e5, beta = 0.05, delta = 1.0 / n;
  int within = 0, exact_private = 0, built = 0;
  double alpha = 0, worst = 0;
  for (int t = 0; built < runs && t < 4 * runs; ++t) {
    const AggregativeGame g = generate_linear(n, 2, 1, 20000 + t);
    const FeasibilityLP lp = feasible_stage2_lp(g, eps);
    if (lp.constraints.empty()) continue;
    ++built;
    DistMWParams mw;
    mw.epsilon = eps;
    mw.delta = delta;
    mw.beta = beta;
    mw.alpha = alpha =
        distmw_target_alpha(n, lp.gamma, eps, lp.constraints.size(), beta, lp.m, delta);
    NoiseSource src(mix_seed(4, t));
    const DistMWResult r = distmw_solve(lp, mw, src);
    const double v = max_violation(lp, r.p_bar);
    worst = std::max(worst, v);
    if (v <= alpha) ++within;
    if (respects_supports(lp, r.p_bar)) ++exact_private;
  }
  const double frac = built ? double(within) / built : 0.0;
  return {built == runs && frac >= 1 - beta - 0.05 && exact_private == built,
          fmt("within alpha %.3f of %g LPs, private exact %g, alpha %.4f", frac, built,
              exact_private, alpha) +
              fmt(", worst violation %.4f", worst)};
}

Outcome psummnash_guarantee() {
  const int n = 2000;
  int ok_off = 0, fail_noisy = 0;
  for (int t = 0; t < 50; ++t) {
    const QuasiAggregativeGame g = generate_threshold(n, 30000 + t, 0.3);
    PsnConfig c;
    c.epsilon = 10.0;
    NoiseSource src(t, NoiseMode::kNoiseOff);
    const PsnResult r = psummnash(g, c, src);
    if (r.status == RunStatus::kOk && quasi_regret(g, r.profile) <= r.bound) ++ok_off;
  }
  const QuasiAggregativeGame g = generate_threshold(n, 31000, 0.3);
  for (int s = 0; s < 100; ++s) {
    PsnConfig c;
    c.epsilon = 10.0;
    NoiseSource src(mix_seed(5, s));
    const PsnResult r = psummnash(g, c, src);
    if (r.status != RunStatus::kOk || quasi_regret(g, r.profile) > r.bound) ++fail_noisy;
  }
  const double beta = PsnConfig{}.beta;
  return {ok_off == 50 && fail_noisy / 100.0 <= beta + 0.05,
          fmt("noise-off within bound %g/50, noisy failure rate %.2f", ok_off,
              fail_noisy / 100.0)};
}

Outcome optin_stage_one() {
  int stage_one = 0;
  for (int t = 0; t < 100; ++t) {
    NoiseSource gen(mix_seed(6, t));
    std::vector<double> T(400);
    for (double& v : T) v = gen.uniform();
    const QuasiAggregativeGame g = make_optin_game(T);
    PsnConfig c;
    c.epsilon = 10.0;
    NoiseSource src(t, NoiseMode::kNoiseOff);
    const PsnResult r = psummnash(g, c, src);
    if (r.status == RunStatus::kOk && r.transcript.branch == OneDimBranch::kFixedPoint &&
        quasi_regret(g, r.profile) <= r.bound) {
      ++stage_one;
    }
  }
  return {stage_one == 100, fmt("stage-one termination %g/100", stage_one)};
}

Outcome presl_vs_brute_force() {
  const double zeta = 0.15, tol = 1e-9;
  int instances = 0, npresl_ok = 0, presl_ok = 0;
  double worst_loss_gap = -1e300, worst_regret_gap = -1e300;
  for (int t = 0; instances < 50 && t < 500; ++t) {
    const AggregativeGame g = generate_linear(4 + t % 3, 2, 1, 40000 + t);
    const auto opt = brute_force_opt_loss(g, zeta);
    if (!opt) continue;
    ++instances;
    NpreslConfig nc;
    nc.zeta = zeta;
    nc.alpha = g.gamma();
    NoiseSource nsrc(t);
    const NpreslResult nr = npresl(g, nc, nsrc);
    const double loss_gap = profile_loss(g, nr.profile) - (*opt + 5 * nc.alpha);
    worst_loss_gap = std::max(worst_loss_gap, loss_gap);
    if (loss_gap <= tol) ++npresl_ok;
    PreslConfig pc;
    pc.zeta = zeta;
    pc.epsilon = 1e6;
    pc.delta = 1.0 / g.n();
    NoiseSource psrc(t, NoiseMode::kNoiseOff);
    const PreslResult pr = presl(g, pc, psrc);
    if (pr.status != RunStatus::kOk) continue;
    const double regret_gap = regret(g, pr.profile).max - (zeta + 12 * pr.params.alpha);
    worst_regret_gap = std::max(worst_regret_gap, regret_gap);
    if (regret_gap <= tol) ++presl_ok;
  }
  return {instances == 50 && npresl_ok == 50 && presl_ok == 50,
          fmt("npresl loss ok %g/%g, presl regret ok %g/%g", npresl_ok, instances, presl_ok,
              instances) +
              fmt(", worst gaps %.3g %.3g", worst_loss_gap, worst_regret_gap)};
}

Outcome selection_vs_brute_force() {
  int ok = 0;
  for (int t = 0; t < 50; ++t) {
    const QuasiAggregativeGame g = generate_threshold(4 + t % 3, 50000 + t, 0.3);
    const QualityFn q = QualityFn::linear();
    SelectionConfig c;
    c.zeta = 4 * g.gamma();
    c.epsilon = 1e6;
    NoiseSource src(t, NoiseMode::kNoiseOff);
    const SelectionResult r = select_equilibrium(g, q, c, src);
    const auto opt = brute_force_opt_quality(g, q, c.zeta);
    if (r.status == RunStatus::kOk && opt && r.quality >= *opt - r.quality_slack - 1e-12 &&
        quasi_regret(g, r.profile) <= r.regret_bound + 1e-12) {
      ++ok;
    }
  }
  return {ok == 50, fmt("quality and regret within bounds %g/50", ok)};
}

Outcome market_loss() {
  int bad = 0;
  double worst = -1e300;
  for (int d = 1; d <= 3; ++d) {
    const double lambda = 2.0 + d;
    const market::MarketGame m = generate_market(40, d, lambda, 60000 + d);
    NoiseSource src(mix_seed(9, d));
    for (int t = 0; t < 10000; ++t) {
      PureProfile x(m.n());
      for (int& a : x) a = static_cast<int>(src.uniform() * m.m());
      const market::MarketMakerLoss l = market::market_maker_loss(m, x);
      for (int k = 0; k < d; ++k) {
        worst = std::max(worst, l.per_security(k) - lambda / 16);
        if (l.per_security(k) > lambda / 16 + 1e-9) ++bad;
      }
    }
  }
  return {bad == 0, fmt("violations %g over 3 x 10000 profiles, max excess %.3g", bad, worst)};
}

Outcome replay() {
  int presl_ok = 0, psn_ok = 0, sel_ok = 0, dmw_ok = 0;
  for (int t = 0; t < 50; ++t) {
    {
      const AggregativeGame g = generate_linear(6, 2, 1, 70000 + t);
      PreslConfig c;
      c.epsilon = 1e6;
      c.delta = 1.0 / 6;
      NoiseSource src(mix_seed(10, t));
      const PreslResult r = presl(g, c, src);
      bool ok = r.status == RunStatus::kOk;
      for (int i = 0; ok && i < g.n(); ++i) {
        ok = presl_replay_player(g, r.params, r.transcript, i) == r.profile[i];
      }
      presl_ok += ok;
    }
    const QuasiAggregativeGame q = generate_threshold(200, 71000 + t, 0.5);
    {
      PsnConfig c;
      c.epsilon = 50.0;
      NoiseSource src(mix_seed(11, t));
      const PsnResult r = psummnash(q, c, src);
      bool ok = r.status == RunStatus::kOk;
      for (int i = 0; ok && i < q.n(); ++i) {
        ok = psummnash_replay_player(q, r.transcript, i) == r.profile[i];
      }
      psn_ok += ok;
    }
    {
      SelectionConfig c;
      c.zeta = 4 * q.gamma();
      c.epsilon = 50.0;
      NoiseSource src(mix_seed(12, t));
      const SelectionResult r = select_equilibrium(q, QualityFn::linear(), c, src);
      bool ok = r.status == RunStatus::kOk;
      for (int i = 0; ok && i < q.n(); ++i) {
        ok = selection_replay_player(q, r.transcript, i) == r.profile[i];
      }
      sel_ok += ok;
    }
    {
      const AggregativeGame g = generate_linear(50, 2, 1, 72000 + t);
      const FeasibilityLP lp = feasible_stage2_lp(g, 1e5);
      if (lp.constraints.empty()) continue;
      DistMWParams mw;
      mw.epsilon = 10.0;
      mw.alpha = 0.2;
      NoiseSource src(mix_seed(13, t));
      const DistMWResult r = distmw_solve(lp, mw, src);
      bool ok = true;
      for (int i = 0; ok && i < lp.n; ++i) {
        const Eigen::RowVectorXd row = replay_player(lp, i, r.transcript, r.schedule.eta);
        ok = row == r.p_bar.row(i);
      }
      dmw_ok += ok;
    }
  }
  return {presl_ok == 50 && psn_ok == 50 && sel_ok == 50 && dmw_ok == 50,
          fmt("bit-exact presl %g/50, psummnash %g/50, select %g/50, ", presl_ok, psn_ok,
              sel_ok) +
              fmt("distmw %g/50", dmw_ok)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(AGGPRIV_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "aggpriv_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string d = dir.string() + "/";
  std::ofstream(d + "lp.json")
      << R"({"n":2,"m":2,"gamma":0.5,"constraints":[{"f":[[1,-1],[1,-1]],"b":-0.5}],)"
         R"("supports":[[0,1],[0,1]]})";
  std::ofstream(d + "devspec.json")
      << R"({"thresholds":[0.1,0.3,0.5,0.7,0.9],"player":1,"misreport_threshold":0.6,)"
         R"("epsilon":20,"runs":5})";
  const std::vector<std::string> commands = {
      "gen-game --kind linear --n 5 --m 2 --d 1 --seed 3",
      "gen-game --kind threshold --n 200 --anti-fraction 0.4 --seed 4",
      "gen-game --kind market --n 6 --d 1 --lambda 4 --market-format --seed 5",
      "presl --game " + d + "lin.json --zeta 0.2 --eps 1e6 --seed 1",
      "npresl --game " + d + "lin.json --zeta 0.2 --seed 1",
      "psummnash --game " + d + "thr.json --eps 10 --seed 1",
      "select --game " + d + "thr.json --zeta 0.02 --eps 10 --seed 1",
      "verify --game " + d + "lin.json --profile " + d + "presl.json",
      "distmw-solve --lp " + d + "lp.json --alpha 0.05 --seed 1",
      "deviate --spec " + d + "devspec.json --seed 1",
      "market-sim --market " + d + "market.json --zeta 0.5 --eps 1e6 --seed 2",
      "bench --algorithm psummnash --game " + d + "thr.json --eps 10 --trials 4 --seed 2 "
      "--no-timing --csv " + d + "bench.csv",
  };
  const std::vector<std::string> names = {"lin", "thr", "market", "presl", "npresl",
                                          "psn", "select", "verify", "dmw", "dev",
                                          "msim", "bench"};
  int identical = 0;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    std::string outs[2];
    bool ran = true;
    for (int rep = 0; rep < 2; ++rep) {
      const int code = run_cli(commands[k] + " --out " + d + names[k] + ".json");
      ran = ran && (code == 0 || code == 2);
      outs[rep] = slurp(d + names[k] + ".json");
      if (names[k] == "bench") outs[rep] += slurp(d + "bench.csv");
    }
    if (ran && !outs[0].empty() && outs[0] == outs[1]) ++identical;
  }
  return {identical == static_cast<int>(commands.size()),
          fmt("byte-identical reruns %g/%g subcommand invocations", identical,
              static_cast<double>(commands.size()))};
}

}  // namespace
}  // namespace aggpriv

int main() {
  using namespace aggpriv;
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"translation lemmas", 10, lemma_suite},
      {"sparse accuracy", 30, sparse_accuracy},
      {"exponential mechanism distribution", 10, exp_distribution},
      {"distributed MW accuracy", 300, distmw_accuracy},
      {"one-dimensional equilibrium guarantee", 120, psummnash_guarantee},
      {"opt-in stage-one termination", 30, optin_stage_one},
      {"private vs non-private vs brute force", 120, presl_vs_brute_force},
      {"equilibrium selection quality", 120, selection_vs_brute_force},
      {"market-maker loss bound", 30, market_loss},
      {"billboard replay", 120, replay},
      {"determinism", 60, determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs <= criteria[k].limit_s;
    failed += !pass;
    std::printf("[%s] %2zu %s: %s (%.1f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", k + 1,
                criteria[k].name, o.detail.c_str(), secs, criteria[k].limit_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
