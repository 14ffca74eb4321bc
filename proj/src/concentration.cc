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

#include "eqsamp/concentration.h"

#include <fmt/format.h>

#include <cmath>

#include "eqsamp/errors.h"

namespace eqsamp {
namespace {

constexpr double kBoundarySlack = 1e-12;

std::vector<std::vector<int>> Supports(
    const std::vector<std::vector<double>>& weights) {
  std::vector<std::vector<int>> supports(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t a = 0; a < weights[i].size(); ++a) {
      if (weights[i][a] > 0.0) supports[i].push_back(static_cast<int>(a));
    }
  }
  return supports;
}

}  // namespace

ProductSpace::ProductSpace(std::vector<std::vector<double>> components,
                           std::vector<double> table)
    : components_(std::move(components)), table_(std::move(table)) {
  const int n = NumComponents();
  strides_.assign(n, 1);
  std::uint64_t size = 1;
  for (int i = n - 1; i >= 0; --i) {
    const auto& mu = components_[i];
    if (mu.empty()) throw ValidationError(fmt::format("component {} is empty", i));
    double total = 0.0;
    for (double p : mu) {
      if (!(p >= 0.0)) {
        throw ValidationError(fmt::format("component {} has negative mass", i));
      }
      total += p;
    }
    if (std::abs(total - 1.0) > kTolerance) {
      throw ValidationError(fmt::format("component {} sums to {}", i, total));
    }
    strides_[i] = size;
    size *= mu.size();
    if (size > kMaxUtilityEntries) {
      throw CapabilityError(fmt::format("product space exceeds {} points",
                                        kMaxUtilityEntries));
    }
  }
  if (table_.size() != size) {
    throw ValidationError(fmt::format("table has {} values, the space has {} points",
                                      table_.size(), size));
  }
  for (double f : table_) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw ValidationError(fmt::format("table value {} is outside [0,1]", f));
    }
  }
}

ProductSpace ProductSpace::FromGame(const Game& game,
                                    const ProductDistribution& x, int player,
                                    int action) {
  game.CheckAction(player, action);
  x.CheckFits(game);
  std::vector<std::vector<double>> components;
  std::vector<int> opponents;
  for (int i = 0; i < game.NumPlayers(); ++i) {
    if (i == player) continue;
    const auto s = x.Strategy(i);
    components.emplace_back(s.begin(), s.end());
    opponents.push_back(i);
  }
  const std::uint64_t size = game.NumProfiles() / game.NumActions(player);
  std::vector<double> table(size);
  std::vector<int> profile(opponents.size(), 0);
  const std::uint64_t base = static_cast<std::uint64_t>(action) * game.Stride(player);
  for (std::uint64_t t = 0; t < size; ++t) {
    std::uint64_t index = base;
    for (std::size_t j = 0; j < opponents.size(); ++j) {
      index += static_cast<std::uint64_t>(profile[j]) * game.Stride(opponents[j]);
    }
    table[t] = game.Payoff(player, ProfileIndex{index});
    for (int j = static_cast<int>(opponents.size()) - 1; j >= 0; --j) {
      if (++profile[j] < game.NumActions(opponents[j])) break;
      profile[j] = 0;
    }
  }
  return ProductSpace(std::move(components), std::move(table));
}

double ProductSpace::Expectation() const { return ExpectationUnder(components_); }

double ProductSpace::ExpectationUnder(
    const std::vector<std::vector<double>>& weights) const {
  const int n = NumComponents();
  if (static_cast<int>(weights.size()) != n) {
    throw ValidationError(fmt::format("need {} weight vectors, got {}", n, weights.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (weights[i].size() != components_[i].size()) {
      throw ValidationError(fmt::format("weights for component {} have length {}, expected {}",
                                        i, weights[i].size(), components_[i].size()));
    }
  }
  const auto supports = Supports(weights);
  std::uint64_t terms = 1;
  for (const auto& s : supports) {
    if (s.empty()) throw ValidationError("a weight vector has empty support");
    terms *= s.size();
    if (terms > kMaxExpectationTerms) {
      throw CapabilityError(fmt::format(
          "exact expectation needs more than {} terms", kMaxExpectationTerms));
    }
  }
  std::vector<std::size_t> position(n, 0);
  double total = 0.0;
  for (;;) {
    double weight = 1.0;
    std::uint64_t index = 0;
    for (int i = 0; i < n; ++i) {
      const int a = supports[i][position[i]];
      weight *= weights[i][a];
      index += static_cast<std::uint64_t>(a) * strides_[i];
    }
    total += weight * table_[index];
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++position[i] < supports[i].size()) break;
      position[i] = 0;
    }
    if (i < 0) break;
  }
  return total;
}

std::vector<std::vector<double>> KSampleProductApproximation(
    const ProductSpace& space, std::int64_t k, Rng& rng) {
  if (k < 1) throw ArgumentError(fmt::format("need k >= 1, got {}", k));
  std::vector<std::vector<double>> approximation;
  for (int i = 0; i < space.NumComponents(); ++i) {
    const auto& mu = space.Component(i);
    const InverseCdfSampler sampler(mu);
    std::vector<std::int64_t> counts(mu.size(), 0);
    for (std::int64_t t = 0; t < k; ++t) ++counts[sampler.Draw(rng)];
    std::vector<double> empirical(mu.size());
    for (std::size_t a = 0; a < mu.size(); ++a) {
      empirical[a] = static_cast<double>(counts[a]) / static_cast<double>(k);
    }
    approximation.push_back(std::move(empirical));
  }
  return approximation;
}

std::vector<std::vector<double>> KSampleProductApproximation(
    const ProductSpace& space, std::int64_t k, SeedRecord seed) {
  Rng rng(seed);
  return KSampleProductApproximation(space, k, rng);
}

double RateEstimate::Rate() const {
  return trials == 0 ? 0.0
                     : static_cast<double>(violations) / static_cast<double>(trials);
}

double RateEstimate::StandardError() const {
  if (trials == 0) return 0.0;
  const double p = Rate();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

RateEstimate ViolationRate(const ProductSpace& space, std::int64_t k,
                           double eps, std::int64_t trials,
                           std::uint64_t master_seed, Inequality inequality,
                           Execution execution) {
  if (k < 1) throw ArgumentError(fmt::format("need k >= 1, got {}", k));
  if (trials < 1) throw ArgumentError(fmt::format("need trials >= 1, got {}", trials));
  if (!(eps > 0.0)) throw ArgumentError(fmt::format("eps must be > 0, got {}", eps));
  // Each empirical component has at most min(k, |support|) atoms.
  std::uint64_t worst = 1;
  for (int i = 0; i < space.NumComponents(); ++i) {
    std::uint64_t atoms = 0;
    for (double p : space.Component(i)) atoms += p > 0.0;
    worst *= std::min<std::uint64_t>(atoms, static_cast<std::uint64_t>(k));
    if (worst > kMaxExpectationTerms) {
      throw CapabilityError(fmt::format(
          "exact empirical expectations may need more than {} terms",
          kMaxExpectationTerms));
    }
  }
  const double truth = space.Expectation();
  const std::uint64_t tag = NameTag("violation_rate");
  const std::int64_t violations = SumTrials(
      trials,
      [&](std::int64_t t) -> std::int64_t {
        Rng rng(SeedRecord{master_seed,
                           StreamId({tag, static_cast<std::uint64_t>(k),
                                     static_cast<std::uint64_t>(t)})});
        const double diff = std::abs(
            space.ExpectationUnder(KSampleProductApproximation(space, k, rng)) - truth);
        return inequality == Inequality::kStrict ? diff > eps + kBoundarySlack
                                                 : diff >= eps - kBoundarySlack;
      },
      execution);
  return {violations, trials};
}

RateEstimate DeviationViolationRate(const Game& game,
                                    const ProductDistribution& x, int player,
                                    int action, std::int64_t k, double eps,
                                    std::int64_t trials,
                                    std::uint64_t master_seed,
                                    Execution execution) {
  return ViolationRate(ProductSpace::FromGame(game, x, player, action), k, eps,
                       trials, master_seed, Inequality::kNonStrict, execution);
}

double ProductSpaceBound(double eps, std::int64_t k) {
  return 4.0 * std::exp(-eps * eps * static_cast<double>(k) / 8.0) / eps;
}

double HoeffdingBound(double eps, std::int64_t k) {
  return 2.0 * std::exp(-eps * eps * static_cast<double>(k) / 2.0);
}

double SharpDeviationBound(double eps, std::int64_t k) {
  return 4.0 * std::exp(-eps * eps * static_cast<double>(k) / 2.0) / eps;
}

}  // namespace eqsamp
