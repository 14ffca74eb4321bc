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

#include "eqsamp/experiments.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <variant>

#include "eqsamp/errors.h"
#include "eqsamp/regret.h"
#include "eqsamp/tester.h"

namespace eqsamp {
namespace {

const double kQuarterE = 1.0 / (4.0 * std::numbers::e);

SeedRecord TrialSeed(std::uint64_t master, std::string_view tag, std::int64_t k,
                     std::int64_t t) {
  return {master, StreamId({NameTag(tag), static_cast<std::uint64_t>(k),
                            static_cast<std::uint64_t>(t)})};
}

void CheckRun(std::int64_t k, std::int64_t trials) {
  if (k < 1) throw ArgumentError(fmt::format("k must be >= 1, got {}", k));
  if (trials < 1) throw ArgumentError(fmt::format("trials must be >= 1, got {}", trials));
}

std::string InstanceLabel(const std::string& name, int parameter) {
  return parameter > 0 ? fmt::format("{}({})", name, parameter) : name;
}

SampleBatch Draw(const Game& game, const NamedDistribution& x, std::int64_t k,
                 SeedRecord seed) {
  return std::visit([&](const auto& d) { return DrawSamples(game, d, k, seed); }, x);
}

bool EmpiricalPasses(const Game& game, const SampleBatch& batch,
                     EquilibriumKind kind, double eps) {
  switch (kind) {
    case EquilibriumKind::kNash:
      return IsEpsNash(game, ProductEmpirical(batch, game), eps).passed;
    case EquilibriumKind::kCe:
      return IsEpsCe(game, JointEmpirical(batch, game).ToJoint(), eps).passed;
    case EquilibriumKind::kCce:
      return IsEpsCce(game, JointEmpirical(batch, game).ToJoint(), eps).passed;
  }
  return false;
}

ExperimentRow RateRow(std::string experiment, std::string instance,
                      std::string kind, double eps, double delta, double alpha,
                      std::int64_t k, std::int64_t trials, std::int64_t successes,
                      std::uint64_t seed) {
  const Interval ci = WilsonInterval(successes, trials);
  return {std::move(experiment), std::move(instance), std::move(kind), eps, delta,
          alpha, k, trials, successes,
          static_cast<double>(successes) / static_cast<double>(trials), ci.low,
          ci.high, seed};
}

ExperimentRow MeanRow(std::string experiment, std::string instance,
                      std::string kind, double eps, std::int64_t k,
                      std::int64_t trials, std::int64_t total,
                      std::int64_t sq_total, std::uint64_t seed) {
  const double n = static_cast<double>(trials);
  const double mean = static_cast<double>(total) / n;
  const double var =
      trials > 1 ? std::max(0.0, (static_cast<double>(sq_total) - n * mean * mean) / (n - 1))
                 : 0.0;
  const double half = 1.959963984540054 * std::sqrt(var / n);
  return {std::move(experiment), std::move(instance), std::move(kind), eps, 0.0, 0.0,
          k, trials, total, mean, mean - half, mean + half, seed};
}

struct CountAcc {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  void Merge(const CountAcc& o) {
    a += o.a;
    b += o.b;
    c += o.c;
  }
};

}  // namespace

Interval WilsonInterval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials < 1 || successes < 0 || successes > trials) {
    throw ArgumentError(fmt::format("invalid proportion {}/{}", successes, trials));
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

std::string ExperimentCsvHeader() {
  return "experiment,instance,kind,eps,delta,alpha,k,trials,successes,rate,"
         "wilson_lo,wilson_hi,seed";
}

std::string ToCsv(const std::vector<ExperimentRow>& rows) {
  std::string out = ExperimentCsvHeader() + "\n";
  for (const ExperimentRow& r : rows) {
    out += fmt::format("{},{},{},{:.10g},{:.10g},{:.10g},{},{},{},{:.10g},{:.10g},{:.10g},{}\n",
                       r.experiment, r.instance, r.kind, r.eps, r.delta, r.alpha,
                       r.k, r.trials, r.successes, r.rate, r.low, r.high, r.seed);
  }
  return out;
}

void ExperimentConfig::Validate() const {
  if (trials < 1) throw ArgumentError(fmt::format("trials must be >= 1, got {}", trials));
  if (k_grid.empty()) throw ArgumentError("k grid is empty");
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    if (k_grid[i] < 1) throw ArgumentError(fmt::format("k = {} is not positive", k_grid[i]));
    if (i > 0 && k_grid[i] <= k_grid[i - 1]) {
      throw ArgumentError("k grid must be strictly ascending");
    }
  }
  if (!(eps >= 0.0)) throw ArgumentError(fmt::format("eps must be >= 0, got {}", eps));
}

std::vector<ExperimentRow> ConvergenceCurve::ToRows() const {
  std::vector<ExperimentRow> out;
  const std::string instance = InstanceLabel(config.instance, config.instance_parameter);
  for (const CurveRow& r : rows) {
    out.push_back(RateRow(config.experiment, instance, std::string(ToString(config.kind)),
                           config.eps, config.delta, config.alpha, r.k, r.trials,
                           r.successes, config.seed));
  }
  return out;
}

ConvergenceCurve RunConvergence(const ExperimentConfig& config) {
  config.Validate();
  const LabeledInstance inst = MakeInstance(config.instance, config.instance_parameter);
  const NamedDistribution& x = inst.Distribution(config.distribution);
  ConvergenceCurve curve{config, {}};
  for (std::int64_t k : config.k_grid) {
    const std::int64_t successes = SumTrials(
        config.trials,
        [&](std::int64_t t) -> std::int64_t {
          const SampleBatch batch =
              Draw(inst.game, x, k, TrialSeed(config.seed, config.experiment, k, t));
          return EmpiricalPasses(inst.game, batch, config.kind, config.eps);
        },
        config.execution);
    const Interval ci = WilsonInterval(successes, config.trials);
    curve.rows.push_back({k, successes, config.trials,
                          static_cast<double>(successes) / config.trials, ci.low,
                          ci.high});
  }
  return curve;
}

PairsOutcome EvaluatePairs(const SampleBatch& batch) {
  const int n = batch.NumPlayers();
  if (n % 2 != 0) {
    throw ValidationError(fmt::format("pairs batch has an odd player count {}", n));
  }
  const std::int64_t k = batch.k();
  PairsOutcome out{false, true, true};
  for (int p = 0; p < n; p += 2) {
    // Counts of action 0 (H) and of the joint cells for this pair.
    std::int64_t heads0 = 0, heads1 = 0, matches = 0;
    for (std::int64_t t = 0; t < k; ++t) {
      const auto a = batch.Profile(t);
      if (a[p] < 0 || a[p] > 1 || a[p + 1] < 0 || a[p + 1] > 1) {
        throw ValidationError("pairs batch has an action outside {0,1}");
      }
      heads0 += a[p] == 0;
      heads1 += a[p + 1] == 0;
      matches += a[p] == a[p + 1];
    }
    if (heads0 == 0 || heads0 == k || heads1 == 0 || heads1 == k) out.some_pure = true;

    // Product empirical, scaled by k^2: u0 = P Q + (k-P)(k-Q).
    const std::int64_t u0 = heads0 * heads1 + (k - heads0) * (k - heads1);
    const std::int64_t gain0 = std::max(heads1, k - heads1) * k - u0;
    const std::int64_t gain1 = std::max(heads0, k - heads0) * k - (k * k - u0);
    if (2 * gain0 > k * k || 2 * gain1 > k * k) out.product_cce_pass = false;

    // Joint empirical, scaled by k.
    const std::int64_t regret0 = std::max(heads1, k - heads1) - matches;
    const std::int64_t regret1 = std::max(heads0, k - heads0) - (k - matches);
    if (2 * regret0 > k || 2 * regret1 > k) out.joint_cce_pass = false;
  }
  return out;
}

std::vector<ExperimentRow> ExNStats::ToRows() const {
  const std::string instance = fmt::format("pairs_matching_pennies({})", n_pairs);
  return {
      RateRow("ex_n:some_pure", instance, "cce", 0.5, 0, 0, k, trials, some_pure, seed),
      RateRow("ex_n:product_cce", instance, "cce", 0.5, 0, 0, k, trials,
              product_cce_pass, seed),
      RateRow("ex_n:joint_cce", instance, "cce", 0.5, 0, 0, k, trials, joint_cce_pass,
              seed),
  };
}

ExNStats RunLowerBoundExN(int n_pairs, std::int64_t k, std::int64_t trials,
                          std::uint64_t seed, Execution execution) {
  CheckRun(k, trials);
  if (n_pairs < 1) throw ArgumentError(fmt::format("n_pairs must be >= 1, got {}", n_pairs));
  const int n = 2 * n_pairs;
  const double half[] = {0.5, 0.5};
  const InverseCdfSampler coin(half);
  const CountAcc acc = ReduceTrials<CountAcc>(
      trials,
      [&](std::int64_t t, CountAcc& out) {
        // Same draw order as DrawSamples on the uniform product.
        const SeedRecord record = TrialSeed(seed, "ex_n", k, t);
        Rng rng(record);
        std::vector<int> actions(static_cast<std::size_t>(k) * n);
        for (int& a : actions) a = static_cast<int>(coin.Draw(rng));
        const PairsOutcome o = EvaluatePairs(SampleBatch(n, std::move(actions), record));
        out.a += o.some_pure;
        out.b += o.product_cce_pass;
        out.c += o.joint_cce_pass;
      },
      execution);
  return {n_pairs, k, trials, acc.a, acc.b, acc.c, seed};
}

std::vector<ExperimentRow> ExAlStats::ToRows() const {
  const std::string instance = fmt::format("althofer({})", b);
  return {
      RateRow("ex_al:small_support", instance, "cce", 0.25, 0, 0, k, trials,
              small_support, seed),
      RateRow("ex_al:cce", instance, "cce", 0.25, 0, 0, k, trials, cce_pass, seed),
      RateRow("ex_al:small_support_cce", instance, "cce", 0.25, 0, 0, k, trials,
              small_support_pass, seed),
  };
}

ExAlStats RunLowerBoundExAl(int b, std::int64_t k, std::int64_t trials,
                            std::uint64_t seed, Execution execution) {
  CheckRun(k, trials);
  const LabeledInstance inst = AlthoferGame(b);
  const NamedDistribution& x = inst.Distribution("uniform_ne");
  struct Acc {
    std::int64_t small = 0, pass = 0, small_pass = 0, min_regret = -1;
    void Merge(const Acc& o) {
      small += o.small;
      pass += o.pass;
      small_pass += o.small_pass;
      if (o.min_regret >= 0 && (min_regret < 0 || o.min_regret < min_regret)) {
        min_regret = o.min_regret;
      }
    }
  };
  const Acc acc = ReduceTrials<Acc>(
      trials,
      [&](std::int64_t t, Acc& out) {
        const SampleBatch batch = Draw(inst.game, x, k, TrialSeed(seed, "ex_al", k, t));
        const auto counts = PlayerActionCounts(batch, inst.game);
        const auto used = std::count_if(counts[0].begin(), counts[0].end(),
                                        [](std::int64_t c) { return c > 0; });
        const Verification check =
            IsEpsCce(inst.game, JointEmpirical(batch, inst.game).ToJoint(), 0.25);
        const bool small = used <= b;
        out.small += small;
        out.pass += check.passed;
        out.small_pass += small && check.passed;
        if (small) {
          // Regrets of a k-uniform joint are multiples of 1/k.
          const std::int64_t numerator =
              std::llround(check.report.MaxCceRegret() * static_cast<double>(k));
          if (out.min_regret < 0 || numerator < out.min_regret) out.min_regret = numerator;
        }
      },
      execution);
  return {b, k, trials, acc.small, acc.pass, acc.small_pass, acc.min_regret, seed};
}

namespace {

// Dummy coordinate of player i's action in DummyMatchingPennies(m).
int DummyOf(int action, int m) { return action % m; }

template <typename Stats>
Stats RunDummyExperiment(int m, std::int64_t k, std::int64_t trials,
                         std::uint64_t seed, Execution execution,
                         const std::string& tag, const std::string& dist,
                         bool require_pair) {
  CheckRun(k, trials);
  const LabeledInstance inst = DummyMatchingPennies(m);
  const NamedDistribution& x = inst.Distribution(dist);
  const CountAcc acc = ReduceTrials<CountAcc>(
      trials,
      [&](std::int64_t t, CountAcc& out) {
        const SampleBatch batch = Draw(inst.game, x, k, TrialSeed(seed, tag, k, t));
        std::vector<std::int64_t> seen0(m, 0), seen1(m, 0);
        for (std::int64_t s = 0; s < k; ++s) {
          const auto a = batch.Profile(s);
          ++seen0[DummyOf(a[0], m)];
          ++seen1[DummyOf(a[1], m)];
        }
        std::int64_t once = 0;
        if (require_pair) {
          // Samples whose dummies are each unique within their coordinate.
          for (std::int64_t s = 0; s < k; ++s) {
            const auto a = batch.Profile(s);
            once += seen0[DummyOf(a[0], m)] == 1 && seen1[DummyOf(a[1], m)] == 1;
          }
        } else {
          for (int d = 0; d < m; ++d) once += seen0[d] == 1;
        }
        out.a += once;
        out.b += once * once;
        out.c += IsEpsCe(inst.game, JointEmpirical(batch, inst.game).ToJoint(),
                         kQuarterE)
                     .passed;
      },
      execution);
  Stats stats;
  stats.m = m;
  stats.k = k;
  stats.trials = trials;
  stats.exactly_once_total = acc.a;
  stats.exactly_once_sq_total = acc.b;
  stats.ce_pass = acc.c;
  stats.seed = seed;
  return stats;
}

}  // namespace

double CorMStats::MeanExactlyOnce() const {
  return static_cast<double>(exactly_once_total) / static_cast<double>(trials);
}

std::vector<ExperimentRow> CorMStats::ToRows() const {
  const std::string instance = fmt::format("dummy_matching_pennies({})", m);
  return {
      RateRow("cor_m:ce", instance, "ce", kQuarterE, 0, 0, k, trials, ce_pass, seed),
      MeanRow("cor_m:exactly_once_mean", instance, "ce", kQuarterE, k, trials,
              exactly_once_total, exactly_once_sq_total, seed),
  };
}

CorMStats RunCorM(int m, std::int64_t k, std::int64_t trials, std::uint64_t seed,
                  Execution execution) {
  return RunDummyExperiment<CorMStats>(m, k, trials, seed, execution, "cor_m",
                                       "canonical_ce", false);
}

double NeToCeStats::MeanExactlyOnce() const {
  return static_cast<double>(exactly_once_total) / static_cast<double>(trials);
}

std::vector<ExperimentRow> NeToCeStats::ToRows() const {
  const std::string instance = fmt::format("dummy_matching_pennies({})", m);
  return {
      RateRow("ne_to_ce:ce", instance, "ce", kQuarterE, 0, 0, k, trials, ce_pass, seed),
      MeanRow("ne_to_ce:exactly_once_mean", instance, "ce", kQuarterE, k, trials,
              exactly_once_total, exactly_once_sq_total, seed),
  };
}

NeToCeStats RunNeToCe(int m, std::int64_t k, std::int64_t trials,
                      std::uint64_t seed, Execution execution) {
  return RunDummyExperiment<NeToCeStats>(m, k, trials, seed, execution, "ne_to_ce",
                                         "uniform_ne", true);
}

std::vector<ExperimentRow> OmegaStats::ToRows() const {
  return {RateRow("omega", fmt::format("dummy_matching_pennies({})", m), "ce", 0, 0, 0,
                  k, trials, hits, seed)};
}

OmegaStats RunOmega(int m, std::int64_t k, std::int64_t trials, std::uint64_t seed,
                    Execution execution) {
  CheckRun(k, trials);
  const LabeledInstance inst = DummyMatchingPennies(m);
  const NamedDistribution& x = inst.Distribution("canonical_ce");
  const std::int64_t hits = SumTrials(
      trials,
      [&](std::int64_t t) -> std::int64_t {
        const SampleBatch batch = Draw(inst.game, x, k, TrialSeed(seed, "omega", k, t));
        std::vector<char> seen(m, 0);
        for (std::int64_t s = 0; s < k; ++s) {
          char& slot = seen[DummyOf(batch.Profile(s)[0], m)];
          if (slot) return 0;
          slot = 1;
        }
        return 1;
      },
      execution);
  return {m, k, trials, hits, OmegaProbability(m, static_cast<int>(k)), seed};
}

std::vector<ExperimentRow> EpsDependenceStats::ToRows() const {
  std::vector<ExperimentRow> out;
  for (const EpsDependenceRow& r : rows) {
    out.push_back(RateRow("eps_dependence", "matching_pennies", "nash",
                          1.0 / std::sqrt(static_cast<double>(r.k)), 0, 0, r.k,
                          r.trials, r.hits, seed));
  }
  return out;
}

EpsDependenceStats RunEpsDependence(const std::vector<std::int64_t>& k_grid,
                                    std::int64_t trials, std::uint64_t seed,
                                    Execution execution) {
  if (k_grid.empty()) throw ArgumentError("k grid is empty");
  const LabeledInstance inst = MatchingPennies();
  const NamedDistribution& x = inst.Distribution("uniform_ne");
  EpsDependenceStats stats;
  stats.seed = seed;
  for (std::int64_t k : k_grid) {
    CheckRun(k, trials);
    const std::int64_t hits = SumTrials(
        trials,
        [&](std::int64_t t) -> std::int64_t {
          const SampleBatch batch =
              Draw(inst.game, x, k, TrialSeed(seed, "eps_dependence", k, t));
          std::int64_t heads = 0;
          for (std::int64_t s = 0; s < k; ++s) heads += batch.Profile(s)[0] == 0;
          // |heads/k - 1/2| >= 1/sqrt(k)  <=>  (2 heads - k)^2 >= 4k.
          const std::int64_t d = 2 * heads - k;
          return d * d >= 4 * k;
        },
        execution);
    stats.rows.push_back({k, trials, hits});
  }
  return stats;
}

double TestCharacteristics::YesRate() const {
  return static_cast<double>(yes_on_equilibrium) / static_cast<double>(config.trials);
}

double TestCharacteristics::NoRate() const {
  return static_cast<double>(no_on_far) / static_cast<double>(config.trials);
}

std::vector<ExperimentRow> TestCharacteristics::ToRows() const {
  const std::string instance = InstanceLabel(config.instance, config.instance_parameter);
  const std::string kind(ToString(config.kind));
  return {
      RateRow("test_characteristics:yes_on_" + config.equilibrium_distribution,
              instance, kind, config.eps, config.delta, config.alpha, k,
              config.trials, yes_on_equilibrium, config.seed),
      RateRow("test_characteristics:no_on_" + config.far_distribution, instance, kind,
              config.eps, config.delta, config.alpha, k, config.trials, no_on_far,
              config.seed),
  };
}

TestCharacteristics RunTestCharacteristics(const TestCharacteristicsConfig& config) {
  if (config.trials < 1) {
    throw ArgumentError(fmt::format("trials must be >= 1, got {}", config.trials));
  }
  const LabeledInstance inst = MakeInstance(config.instance, config.instance_parameter);
  const NamedDistribution& eq = inst.Distribution(config.equilibrium_distribution);
  const NamedDistribution& far = inst.Distribution(config.far_distribution);
  const TestSpec spec{config.kind, config.delta, config.eps, config.alpha};
  TestCharacteristics result;
  result.config = config;
  result.k = config.k > 0 ? config.k : RequiredTestSamples(inst.game, spec);
  const std::int64_t k = result.k;
  result.yes_on_equilibrium = SumTrials(
      config.trials,
      [&](std::int64_t t) -> std::int64_t {
        const SampleBatch batch =
            Draw(inst.game, eq, k, TrialSeed(config.seed, "test_characteristics:eq", k, t));
        return RunTest(inst.game, batch, spec).answer == Answer::kYes;
      },
      config.execution);
  result.no_on_far = SumTrials(
      config.trials,
      [&](std::int64_t t) -> std::int64_t {
        const SampleBatch batch =
            Draw(inst.game, far, k, TrialSeed(config.seed, "test_characteristics:far", k, t));
        return RunTest(inst.game, batch, spec).answer == Answer::kNo;
      },
      config.execution);
  return result;
}

}  // namespace eqsamp
