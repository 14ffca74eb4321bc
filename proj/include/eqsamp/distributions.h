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

#ifndef EQSAMP_DISTRIBUTIONS_H_
#define EQSAMP_DISTRIBUTIONS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqsamp/game.h"
#include "eqsamp/rng.h"

namespace eqsamp {

// Independent mixed strategies, one probability vector per player.
class ProductDistribution {
 public:
  // Throws ValidationError unless every vector is nonnegative, nonempty and
  // sums to 1 within kTolerance.
  explicit ProductDistribution(std::vector<std::vector<double>> strategies);

  static ProductDistribution Uniform(const Game& game);
  static ProductDistribution Pure(const Game& game,
                                  std::span<const int> profile);

  int NumPlayers() const { return static_cast<int>(strategies_.size()); }
  std::span<const double> Strategy(int player) const {
    return strategies_[player];
  }
  double Prob(int player, int action) const {
    return strategies_[player][action];
  }
  // Actions with positive probability, ascending.
  std::vector<int> Support(int player) const;

  // ValidationError on a player or action count mismatch.
  void CheckFits(const Game& game) const;

  bool operator==(const ProductDistribution&) const = default;

 private:
  std::vector<std::vector<double>> strategies_;
};

struct JointEntry {
  ProfileIndex index;
  double probability = 0.0;
  friend bool operator==(const JointEntry&, const JointEntry&) = default;
};

// Sparse distribution over profiles. Entries are sorted by index, unique and
// strictly positive.
class JointDistribution {
 public:
  // Duplicate indices are merged and zero entries dropped. Throws
  // ValidationError on negative mass or a total outside 1 +- kTolerance.
  explicit JointDistribution(std::vector<JointEntry> entries);

  static JointDistribution PointMass(ProfileIndex index);
  // Uniform over the listed profiles, counting repeats.
  static JointDistribution UniformOver(std::span<const ProfileIndex> profiles);
  // Every profile of the game with equal mass.
  static JointDistribution UniformAll(const Game& game);
  // prod_i x_i as a joint; CapabilityError if the product of supports
  // exceeds max_support.
  static JointDistribution FromProduct(const Game& game,
                                       const ProductDistribution& x,
                                       std::uint64_t max_support = 1u << 22);

  std::span<const JointEntry> Entries() const { return entries_; }
  std::size_t SupportSize() const { return entries_.size(); }
  double Prob(ProfileIndex index) const;

  // Per-player marginal probabilities.
  std::vector<std::vector<double>> Marginals(const Game& game) const;

  void CheckFits(const Game& game) const;

 private:
  std::vector<JointEntry> entries_;
};

// A k-uniform joint distribution: integer counts summing to k.
class KUniformJoint {
 public:
  struct Entry {
    ProfileIndex index;
    std::int64_t count = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Throws ValidationError unless counts are positive, indices unique and the
  // counts sum to k.
  KUniformJoint(std::int64_t k, std::vector<Entry> counts);

  std::int64_t k() const { return k_; }
  std::span<const Entry> Counts() const { return counts_; }
  JointDistribution ToJoint() const;

  // counts[i][a_i] = number of samples in which player i played a_i.
  std::vector<std::vector<std::int64_t>> MarginalCounts(const Game& game) const;

 private:
  std::int64_t k_;
  std::vector<Entry> counts_;
};

// k ordered profiles, stored row-major.
class SampleBatch {
 public:
  SampleBatch(int num_players, std::vector<int> actions, SeedRecord seed);

  std::int64_t k() const {
    return static_cast<std::int64_t>(actions_.size()) / num_players_;
  }
  int NumPlayers() const { return num_players_; }
  std::span<const int> Profile(std::int64_t t) const {
    return std::span<const int>(actions_).subspan(
        static_cast<std::size_t>(t * num_players_),
        static_cast<std::size_t>(num_players_));
  }
  const SeedRecord& seed() const { return seed_; }

  // ValidationError if any sample is not a profile of `game`.
  void CheckFits(const Game& game) const;

  bool operator==(const SampleBatch&) const = default;

 private:
  int num_players_;
  std::vector<int> actions_;
  SeedRecord seed_;
};

// Inverse-CDF draws from a finite weight vector. Zero-weight outcomes are
// never returned.
class InverseCdfSampler {
 public:
  explicit InverseCdfSampler(std::span<const double> weights);
  std::size_t Draw(Rng& rng) const;

 private:
  std::vector<double> cumulative_;
  std::size_t last_positive_ = 0;
};

// k i.i.d. profiles; deterministic in (x, k, seed). ArgumentError if k < 1.
SampleBatch DrawSamples(const Game& game, const ProductDistribution& x,
                        std::int64_t k, SeedRecord seed);
SampleBatch DrawSamples(const Game& game, const JointDistribution& x,
                        std::int64_t k, SeedRecord seed);

std::vector<std::vector<std::int64_t>> PlayerActionCounts(
    const SampleBatch& batch, const Game& game);

// prod_i s^k_i.
ProductDistribution ProductEmpirical(const SampleBatch& batch,
                                     const Game& game);
// s^k, the empirical distribution of whole profiles.
KUniformJoint JointEmpirical(const SampleBatch& batch, const Game& game);

// "# seed=<master> stream=<id> k=<k>", header "a_1,...,a_n", one row per
// sample.
std::string WriteSampleCsv(const SampleBatch& batch);
SampleBatch ReadSampleCsv(std::string_view text);
SampleBatch ReadSampleFile(const std::string& path);

}  // namespace eqsamp

#endif  // EQSAMP_DISTRIBUTIONS_H_
