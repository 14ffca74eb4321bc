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

#ifndef EQSAMP_EXPERIMENTS_H_
#define EQSAMP_EXPERIMENTS_H_

// Seeded Monte Carlo experiments. Trial t at sample size k of experiment E
// draws from the stream StreamId({NameTag(E), k, t}) of the master seed, and
// every statistic is an integer count, so results are identical under any
// thread schedule and under Execution::kSerial.

#include <cstdint>
#include <string>
#include <vector>

#include "eqsamp/parallel.h"
#include "eqsamp/thresholds.h"
#include "eqsamp/zoo.h"

namespace eqsamp {

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

// Wilson score interval for successes/trials at z (1.96 -> 95%).
Interval WilsonInterval(std::int64_t successes, std::int64_t trials,
                        double z = 1.959963984540054);

// One line of experiment CSV:
// experiment,instance,kind,eps,delta,alpha,k,trials,successes,rate,wilson_lo,wilson_hi,seed
// Rate rows carry a proportion and its Wilson interval. Mean rows
// (experiment "<name>:<metric>_mean") carry an integer total in `successes`,
// the mean in `rate` and a normal 95% interval.
struct ExperimentRow {
  std::string experiment;
  std::string instance;
  std::string kind;
  double eps = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  std::int64_t k = 0;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double rate = 0.0;
  double low = 0.0;
  double high = 0.0;
  std::uint64_t seed = 0;
};

std::string ExperimentCsvHeader();
std::string ToCsv(const std::vector<ExperimentRow>& rows);

struct ExperimentConfig {
  std::string experiment = "convergence";
  std::string instance = "matching_pennies";
  int instance_parameter = 0;
  std::string distribution = "uniform_ne";
  EquilibriumKind kind = EquilibriumKind::kNash;
  double eps = 0.3;
  double delta = 0.0;
  double alpha = 0.1;
  std::vector<std::int64_t> k_grid;
  std::int64_t trials = 200;
  std::uint64_t seed = kDefaultSeed;
  Execution execution = Execution::kParallel;

  // ArgumentError unless trials >= 1 and k_grid is nonempty, positive and
  // strictly ascending.
  void Validate() const;
};

struct CurveRow {
  std::int64_t k = 0;
  std::int64_t successes = 0;
  std::int64_t trials = 0;
  double success_rate = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
};

struct ConvergenceCurve {
  ExperimentConfig config;
  std::vector<CurveRow> rows;
  std::vector<ExperimentRow> ToRows() const;
};

// For each k: sample `trials` batches from the named distribution; a trial
// succeeds if the empirical object (product for NASH, joint otherwise)
// passes the eps-verifier of `kind`.
ConvergenceCurve RunConvergence(const ExperimentConfig& config);

// One batch of the pairs game (player 2p matches, 2p+1 mismatches),
// evaluated pair by pair with exact integer arithmetic. Regrets of a player
// depend only on its pair, so no dense game is needed.
struct PairsOutcome {
  bool some_pure = false;
  bool product_cce_pass = false;  // product empirical is a 1/2-CCE
  bool joint_cce_pass = false;    // joint empirical is a 1/2-CCE
};
PairsOutcome EvaluatePairs(const SampleBatch& batch);

// Pairs of matching-pennies players at the all-uniform equilibrium.
struct ExNStats {
  int n_pairs = 0;
  std::int64_t k = 0;
  std::int64_t trials = 0;
  std::int64_t some_pure = 0;          // some player's empirical is pure
  std::int64_t product_cce_pass = 0;   // product empirical is a 1/2-CCE
  std::int64_t joint_cce_pass = 0;     // joint empirical is a 1/2-CCE
  std::uint64_t seed = 0;
  std::vector<ExperimentRow> ToRows() const;
};
ExNStats RunLowerBoundExN(int n_pairs, std::int64_t k, std::int64_t trials,
                          std::uint64_t seed,
                          Execution execution = Execution::kParallel);

// Samples of the uniform equilibrium of AlthoferGame(b).
struct ExAlStats {
  int b = 0;
  std::int64_t k = 0;
  std::int64_t trials = 0;
  std::int64_t small_support = 0;   // player 0's empirical support <= b
  std::int64_t cce_pass = 0;        // joint empirical is a 1/4-CCE
  std::int64_t small_support_pass = 0;
  // Smallest max-CCE-regret seen among small-support trials, in units of
  // 1/k (exact integer), or -1 if there were none.
  std::int64_t min_small_support_regret_numerator = -1;
  std::uint64_t seed = 0;
  std::vector<ExperimentRow> ToRows() const;
};
ExAlStats RunLowerBoundExAl(int b, std::int64_t k, std::int64_t trials,
                            std::uint64_t seed,
                            Execution execution = Execution::kParallel);

// k samples of the canonical correlated equilibrium of
// DummyMatchingPennies(m): dummy values sampled exactly once and the
// 1/(4e)-CE pass rate of the joint empirical.
struct CorMStats {
  int m = 0;
  std::int64_t k = 0;
  std::int64_t trials = 0;
  std::int64_t exactly_once_total = 0;
  std::int64_t exactly_once_sq_total = 0;
  std::int64_t ce_pass = 0;
  std::uint64_t seed = 0;
  double MeanExactlyOnce() const;
  std::vector<ExperimentRow> ToRows() const;
};
CorMStats RunCorM(int m, std::int64_t k, std::int64_t trials,
                  std::uint64_t seed,
                  Execution execution = Execution::kParallel);

// k samples of the uniform Nash equilibrium of DummyMatchingPennies(m):
// pairs (d0,d1) that appear with each coordinate seen exactly once, and the
// 1/(4e)-CE pass rate.
struct NeToCeStats {
  int m = 0;
  std::int64_t k = 0;
  std::int64_t trials = 0;
  std::int64_t exactly_once_total = 0;
  std::int64_t exactly_once_sq_total = 0;
  std::int64_t ce_pass = 0;
  std::uint64_t seed = 0;
  double MeanExactlyOnce() const;
  std::vector<ExperimentRow> ToRows() const;
};
NeToCeStats RunNeToCe(int m, std::int64_t k, std::int64_t trials,
                      std::uint64_t seed,
                      Execution execution = Execution::kParallel);

// Frequency of all-distinct dummies among k samples of canonical_ce.
struct OmegaStats {
  int m = 0;
  std::int64_t k = 0;
  std::int64_t trials = 0;
  std::int64_t hits = 0;
  double exact = 0.0;
  std::uint64_t seed = 0;
  std::vector<ExperimentRow> ToRows() const;
};
OmegaStats RunOmega(int m, std::int64_t k, std::int64_t trials,
                    std::uint64_t seed,
                    Execution execution = Execution::kParallel);

// Frequency that player 0's empirical in matching pennies deviates from 1/2
// by at least 1/sqrt(k), per k.
struct EpsDependenceRow {
  std::int64_t k = 0;
  std::int64_t trials = 0;
  std::int64_t hits = 0;
};
struct EpsDependenceStats {
  std::vector<EpsDependenceRow> rows;
  std::uint64_t seed = 0;
  std::vector<ExperimentRow> ToRows() const;
};
EpsDependenceStats RunEpsDependence(const std::vector<std::int64_t>& k_grid,
                                    std::int64_t trials, std::uint64_t seed,
                                    Execution execution = Execution::kParallel);

// Operating characteristic of the tester at k = the matching test threshold
// (or config.k_grid[0] if given).
struct TestCharacteristicsConfig {
  std::string instance = "matching_pennies";
  int instance_parameter = 0;
  std::string equilibrium_distribution = "uniform_ne";  // a delta-equilibrium
  std::string far_distribution = "pure_hh";  // not a (delta+eps)-equilibrium
  EquilibriumKind kind = EquilibriumKind::kNash;
  double delta = 0.0;
  double eps = 0.3;
  double alpha = 0.1;
  std::int64_t k = 0;  // 0 = use the test threshold
  std::int64_t trials = 200;
  std::uint64_t seed = kDefaultSeed;
  Execution execution = Execution::kParallel;
};
struct TestCharacteristics {
  TestCharacteristicsConfig config;
  std::int64_t k = 0;
  std::int64_t yes_on_equilibrium = 0;
  std::int64_t no_on_far = 0;
  double YesRate() const;
  double NoRate() const;
  std::vector<ExperimentRow> ToRows() const;
};
TestCharacteristics RunTestCharacteristics(
    const TestCharacteristicsConfig& config);

}  // namespace eqsamp

#endif  // EQSAMP_EXPERIMENTS_H_
