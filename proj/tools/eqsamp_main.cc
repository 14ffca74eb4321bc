// Copyright 2026 The eqsamp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// eqsamp command-line tool. Subcommands:
//   thresholds     sample-complexity table as CSV
//   zoo            list instances or emit one as a game file
//   sample         draw samples from a named distribution as CSV
//   test           run an equilibrium test on a sample file (exit 0 YES, 3 NO)
//   solve          exhaustive k-uniform eps-Nash search
//   concentration  Monte Carlo violation rates against the bounds
//   experiment     seeded Monte Carlo experiments as CSV

#include <fmt/format.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "eqsamp/concentration.h"
#include "eqsamp/errors.h"
#include "eqsamp/experiments.h"
#include "eqsamp/solver.h"
#include "eqsamp/tester.h"
#include "eqsamp/thresholds.h"
#include "eqsamp/zoo.h"

namespace {

using namespace eqsamp;

constexpr int kExitNo = 3;

struct GlobalOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::int64_t> trials;
  std::string out;
  bool serial = false;

  std::int64_t Trials(std::int64_t fallback) const { return trials.value_or(fallback); }
  Execution Exec() const { return serial ? Execution::kSerial : Execution::kParallel; }
};

void Emit(const GlobalOptions& global, const std::string& text) {
  if (global.out.empty() || global.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(global.out);
  if (!file) throw ParseError(fmt::format("cannot write '{}'", global.out));
  file << text;
}

// --- thresholds -------------------------------------------------------------

struct ThresholdsOptions {
  std::string kind = "all";
  std::string purpose = "all";
  std::vector<double> eps = {0.1};
  std::vector<double> alpha = {0.05};
  std::vector<int> n = {2};
  std::vector<int> m = {2};
};

std::string RunThresholds(const ThresholdsOptions& o) {
  std::vector<EquilibriumKind> kinds;
  if (o.kind == "all") {
    kinds = {EquilibriumKind::kNash, EquilibriumKind::kCe, EquilibriumKind::kCce};
  } else {
    kinds = {ParseKind(o.kind)};
  }
  std::vector<Purpose> purposes;
  if (o.purpose == "all") {
    purposes = {Purpose::kConvergence, Purpose::kSupportSize, Purpose::kTest};
  } else {
    purposes = {ParsePurpose(o.purpose)};
  }
  std::string out = "kind,purpose,eps,alpha,n,m,raw_bound,k\n";
  for (EquilibriumKind kind : kinds) {
    for (Purpose purpose : purposes) {
      const bool support = purpose == Purpose::kSupportSize;
      const std::vector<double> alphas = support ? std::vector<double>{NAN} : o.alpha;
      for (double eps : o.eps) {
        for (double alpha : alphas) {
          for (int n : o.n) {
            for (int m : o.m) {
              const ThresholdResult r =
                  Threshold(kind, purpose, eps,
                            support ? std::nullopt : std::optional<double>(alpha), n, m);
              out += fmt::format("{},{},{:.10g},{},{},{},{:.10f},{}\n", ToString(kind),
                                 ToString(purpose), eps,
                                 support ? std::string() : fmt::format("{:.10g}", alpha),
                                 n, m, r.raw_bound, r.k);
            }
          }
        }
      }
    }
  }
  return out;
}

// --- zoo / sample -----------------------------------------------------------

std::string ZooList() {
  std::string out;
  for (const ZooEntry& e : ZooCatalog()) {
    const std::string param =
        e.parameter.empty() ? "" : fmt::format(" [--param {}, default {}]", e.parameter,
                                               e.default_parameter);
    out += fmt::format("{}{}\n    {}\n", e.name, param, e.note);
  }
  return out;
}

struct SampleOptions {
  std::string instance = "matching_pennies";
  int param = 0;
  std::string dist = "uniform_ne";
  std::int64_t k = 100;
};

std::string RunSample(const GlobalOptions& global, const SampleOptions& o) {
  const LabeledInstance inst = MakeInstance(o.instance, o.param);
  const NamedDistribution& x = inst.Distribution(o.dist);
  const SeedRecord seed{global.seed, StreamId({NameTag("sample"), NameTag(inst.name),
                                               NameTag(o.dist)})};
  const SampleBatch batch = std::visit(
      [&](const auto& d) { return DrawSamples(inst.game, d, o.k, seed); }, x);
  return WriteSampleCsv(batch);
}

// --- test -------------------------------------------------------------------

struct TestOptions {
  std::string game;
  std::string samples;
  std::string kind = "nash";
  double delta = 0.0;
  double eps = 0.1;
  double alpha = 0.1;
};

int RunTestCommand(const GlobalOptions& global, const TestOptions& o) {
  const Game game = ReadGameFile(o.game);
  const SampleBatch batch = ReadSampleFile(o.samples);
  const TestSpec spec{ParseKind(o.kind), o.delta, o.eps, o.alpha};
  const TestVerdict verdict = RunTest(game, batch, spec);
  Emit(global, verdict.ToJson(spec).dump(2) + "\n");
  return verdict.answer == Answer::kYes ? 0 : kExitNo;
}

// --- solve ------------------------------------------------------------------

struct SolveOptions {
  std::string game;
  double eps = 0.1;
  std::optional<int> k;
  std::uint64_t cap = kDefaultCandidateCap;
  std::optional<int> max_support;
};

std::string RunSolve(const GlobalOptions& global, const SolveOptions& o) {
  const Game game = ReadGameFile(o.game);
  int k = 0;
  if (o.k) {
    k = *o.k;
  } else {
    const auto bound = KNashSupport(o.eps, game.NumPlayers(), game.MaxActions()).k;
    if (bound > 1'000'000) {
      throw CapabilityError(fmt::format("default k = {} is too large; pass --k", bound));
    }
    k = static_cast<int>(bound);
  }
  SolverOptions options;
  options.candidate_cap = o.cap;
  options.max_support = o.max_support;
  options.execution = global.Exec();
  const SolverResult result = ExhaustiveKUniformNash(game, o.eps, k, options);
  nlohmann::json out = result.ToJson();
  out["eps"] = o.eps;
  if (!result.profile) out["k"] = k;
  return out.dump(2) + "\n";
}

// --- concentration ----------------------------------------------------------

struct ConcentrationOptions {
  std::string game;
  std::string instance;
  int param = 0;
  std::string dist = "uniform_ne";
  int player = 0;
  int action = 0;
  std::vector<std::string> components;  // "p1,p2,..." per component
  std::vector<double> table;
  std::vector<std::int64_t> k = {50, 200, 800};
  double eps = 0.2;
};

std::vector<double> ParseDoubles(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string cell = text.substr(start, comma - start);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw ParseError(fmt::format("cannot parse a number from '{}'", cell));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string RunConcentration(const GlobalOptions& global, const ConcentrationOptions& o) {
  const std::int64_t trials = global.Trials(1000);
  std::optional<ProductSpace> space;
  bool game_view = true;
  if (!o.components.empty()) {
    std::vector<std::vector<double>> components;
    for (const std::string& c : o.components) components.push_back(ParseDoubles(c));
    space.emplace(std::move(components), o.table);
    game_view = false;
  } else if (!o.game.empty()) {
    const Game game = ReadGameFile(o.game);
    space.emplace(ProductSpace::FromGame(game, ProductDistribution::Uniform(game),
                                         o.player, o.action));
  } else {
    const LabeledInstance inst =
        MakeInstance(o.instance.empty() ? "matching_pennies" : o.instance, o.param);
    const auto* x = std::get_if<ProductDistribution>(&inst.Distribution(o.dist));
    if (x == nullptr) {
      throw ArgumentError(fmt::format("distribution '{}' is not a product", o.dist));
    }
    space.emplace(ProductSpace::FromGame(inst.game, *x, o.player, o.action));
  }
  std::string out = "k,eps,empirical_rate,hoe_gen_bound,hoeffding_bound,sharp_deviation_bound\n";
  for (std::int64_t k : o.k) {
    const RateEstimate rate =
        ViolationRate(*space, k, o.eps, trials, global.seed,
                      game_view ? Inequality::kNonStrict : Inequality::kStrict,
                      global.Exec());
    out += fmt::format("{},{:.10g},{:.10g},{:.10g},{:.10g},{:.10g}\n", k, o.eps,
                       rate.Rate(), ProductSpaceBound(o.eps, k), HoeffdingBound(o.eps, k),
                       SharpDeviationBound(o.eps, k));
  }
  return out;
}

// --- experiment -------------------------------------------------------------

struct ExperimentOptions {
  std::string name = "convergence";
  std::string instance = "matching_pennies";
  int param = 0;
  std::string dist = "uniform_ne";
  std::string far_dist = "pure_hh";
  std::string kind = "nash";
  double eps = 0.3;
  double delta = 0.0;
  double alpha = 0.1;
  std::vector<std::int64_t> k;
  int n_pairs = 128;
  int b = 3;
  int m = 64;
};

std::string RunExperiment(const GlobalOptions& global, const ExperimentOptions& o) {
  const std::int64_t trials = global.Trials(200);
  const auto k_or = [&](std::int64_t fallback) {
    if (o.k.size() > 1) throw ArgumentError("this experiment takes a single --k");
    return o.k.empty() ? fallback : o.k.front();
  };
  std::vector<ExperimentRow> rows;
  if (o.name == "convergence") {
    ExperimentConfig config;
    config.instance = o.instance;
    config.instance_parameter = o.param;
    config.distribution = o.dist;
    config.kind = ParseKind(o.kind);
    config.eps = o.eps;
    config.delta = o.delta;
    config.alpha = o.alpha;
    config.k_grid = o.k;
    if (config.k_grid.empty()) {
      const LabeledInstance inst = MakeInstance(o.instance, o.param);
      config.k_grid = {Threshold(config.kind, Purpose::kConvergence, o.eps, o.alpha,
                                 inst.game.NumPlayers(), inst.game.MaxActions())
                           .k};
    }
    config.trials = trials;
    config.seed = global.seed;
    config.execution = global.Exec();
    rows = RunConvergence(config).ToRows();
  } else if (o.name == "ex_n") {
    rows = RunLowerBoundExN(o.n_pairs, k_or(3), trials, global.seed, global.Exec()).ToRows();
  } else if (o.name == "ex_al") {
    rows = RunLowerBoundExAl(o.b, k_or(o.b), trials, global.seed, global.Exec()).ToRows();
  } else if (o.name == "cor_m") {
    rows = RunCorM(o.m, k_or(o.m), trials, global.seed, global.Exec()).ToRows();
  } else if (o.name == "ne_to_ce") {
    rows = RunNeToCe(o.m, k_or(o.m), trials, global.seed, global.Exec()).ToRows();
  } else if (o.name == "omega") {
    const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(o.m)));
    rows = RunOmega(o.m, k_or(root), trials, global.seed, global.Exec()).ToRows();
  } else if (o.name == "eps_dependence") {
    const std::vector<std::int64_t> grid =
        o.k.empty() ? std::vector<std::int64_t>{1, 4, 16, 64, 256} : o.k;
    rows = RunEpsDependence(grid, trials, global.seed, global.Exec()).ToRows();
  } else if (o.name == "test_characteristics") {
    TestCharacteristicsConfig config;
    config.instance = o.instance;
    config.instance_parameter = o.param;
    config.equilibrium_distribution = o.dist;
    config.far_distribution = o.far_dist;
    config.kind = ParseKind(o.kind);
    config.delta = o.delta;
    config.eps = o.eps;
    config.alpha = o.alpha;
    config.k = k_or(0);
    config.trials = trials;
    config.seed = global.seed;
    config.execution = global.Exec();
    rows = RunTestCharacteristics(config).ToRows();
  } else {
    throw ArgumentError(fmt::format(
        "unknown experiment '{}' (convergence, ex_n, ex_al, cor_m, ne_to_ce, omega, "
        "eps_dependence, test_characteristics)",
        o.name));
  }
  return ToCsv(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling-based equilibrium verification, testing and experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "master seed")->default_val(kDefaultSeed);
  app.add_option("--trials", global.trials, "Monte Carlo trials");
  app.add_option("--out", global.out, "output path (default stdout)");
  app.add_flag("--serial", global.serial, "run trial loops on one thread");

  ThresholdsOptions th;
  auto* thresholds = app.add_subcommand("thresholds", "sample-complexity table (CSV)");
  thresholds->add_option("--kind", th.kind, "nash, ce, cce or all")->capture_default_str();
  thresholds->add_option("--purpose", th.purpose, "convergence, support, test or all")
      ->capture_default_str();
  thresholds->add_option("--eps", th.eps, "eps grid")->delimiter(',')->capture_default_str();
  thresholds->add_option("--alpha", th.alpha, "alpha grid")->delimiter(',')->capture_default_str();
  thresholds->add_option("--n", th.n, "player-count grid")->delimiter(',')->capture_default_str();
  thresholds->add_option("--m", th.m, "action-count grid")->delimiter(',')->capture_default_str();

  bool zoo_list = false;
  std::string zoo_name;
  int zoo_param = 0;
  auto* zoo = app.add_subcommand("zoo", "list instances or emit one as a game file");
  zoo->add_flag("--list", zoo_list, "list instances");
  zoo->add_option("name", zoo_name, "instance name");
  zoo->add_option("--param", zoo_param, "instance parameter (0 = default)");

  SampleOptions so;
  auto* sample = app.add_subcommand("sample", "draw samples from a zoo distribution (CSV)");
  sample->add_option("--instance", so.instance)->capture_default_str();
  sample->add_option("--param", so.param, "instance parameter (0 = default)");
  sample->add_option("--dist", so.dist)->capture_default_str();
  sample->add_option("--k", so.k, "number of samples")->capture_default_str();

  TestOptions to;
  auto* test = app.add_subcommand("test", "equilibrium test; exit 0 on YES, 3 on NO");
  test->add_option("--game", to.game, "game file (JSON)")->required();
  test->add_option("--samples", to.samples, "sample file (CSV)")->required();
  test->add_option("--kind", to.kind, "nash, ce or cce")->capture_default_str();
  test->add_option("--delta", to.delta)->capture_default_str();
  test->add_option("--eps", to.eps)->capture_default_str();
  test->add_option("--alpha", to.alpha)->capture_default_str();

  SolveOptions sv;
  auto* solve = app.add_subcommand("solve", "exhaustive k-uniform eps-Nash search");
  solve->add_option("--game", sv.game, "game file (JSON)")->required();
  solve->add_option("--eps", sv.eps)->capture_default_str();
  solve->add_option("--k", sv.k, "uniformity (default: the support-size bound)");
  solve->add_option("--cap", sv.cap, "candidate cap")->capture_default_str();
  solve->add_option("--max-support", sv.max_support,
                    "heuristic: only strategies using at most this many actions");

  ConcentrationOptions co;
  auto* concentration =
      app.add_subcommand("concentration", "violation rates against concentration bounds");
  concentration->add_option("--game", co.game, "game file; opponents play uniformly");
  concentration->add_option("--instance", co.instance, "zoo instance (default matching_pennies)");
  concentration->add_option("--param", co.param);
  concentration->add_option("--dist", co.dist, "product distribution of the instance")
      ->capture_default_str();
  concentration->add_option("--player", co.player)->capture_default_str();
  concentration->add_option("--action", co.action)->capture_default_str();
  concentration->add_option("--component", co.components,
                            "explicit component distribution 'p1,p2,...' (repeatable)");
  concentration->add_option("--table", co.table, "explicit f table over the product")
      ->delimiter(',');
  concentration->add_option("--k", co.k, "k grid")->delimiter(',')->capture_default_str();
  concentration->add_option("--eps", co.eps)->capture_default_str();

  ExperimentOptions eo;
  auto* experiment = app.add_subcommand("experiment", "seeded Monte Carlo experiment (CSV)");
  experiment->add_option("name", eo.name,
                         "convergence, ex_n, ex_al, cor_m, ne_to_ce, omega, "
                         "eps_dependence, test_characteristics")
      ->required();
  experiment->add_option("--instance", eo.instance)->capture_default_str();
  experiment->add_option("--param", eo.param, "instance parameter (0 = default)");
  experiment->add_option("--dist", eo.dist, "sampled (or equilibrium) distribution")
      ->capture_default_str();
  experiment->add_option("--far-dist", eo.far_dist, "far distribution for test_characteristics")
      ->capture_default_str();
  experiment->add_option("--kind", eo.kind)->capture_default_str();
  experiment->add_option("--eps", eo.eps)->capture_default_str();
  experiment->add_option("--delta", eo.delta)->capture_default_str();
  experiment->add_option("--alpha", eo.alpha)->capture_default_str();
  experiment->add_option("--k", eo.k, "k grid or single k")->delimiter(',');
  experiment->add_option("--n-pairs", eo.n_pairs)->capture_default_str();
  experiment->add_option("--b", eo.b)->capture_default_str();
  experiment->add_option("--m", eo.m)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (global.trials && *global.trials < 1) throw ArgumentError("--trials must be >= 1");
    if (*thresholds) {
      Emit(global, RunThresholds(th));
    } else if (*zoo) {
      if (zoo_list || zoo_name.empty()) {
        Emit(global, ZooList());
      } else {
        Emit(global, SaveGame(MakeInstance(zoo_name, zoo_param).game));
      }
    } else if (*sample) {
      Emit(global, RunSample(global, so));
    } else if (*test) {
      return RunTestCommand(global, to);
    } else if (*solve) {
      Emit(global, RunSolve(global, sv));
    } else if (*concentration) {
      Emit(global, RunConcentration(global, co));
    } else if (*experiment) {
      Emit(global, RunExperiment(global, eo));
    }
  } catch (const eqsamp::Error& e) {
    std::cerr << "eqsamp: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
