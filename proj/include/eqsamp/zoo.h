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

#ifndef EQSAMP_ZOO_H_
#define EQSAMP_ZOO_H_

// Games used by the upper- and lower-bound experiments, with their named
// equilibria. Every distribution claimed to be an exact equilibrium is
// verified at eps = 0 on construction.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "eqsamp/distributions.h"
#include "eqsamp/game.h"
#include "eqsamp/rng.h"

namespace eqsamp {

using NamedDistribution = std::variant<ProductDistribution, JointDistribution>;

struct LabeledInstance {
  std::string name;
  Game game;
  std::map<std::string, NamedDistribution> distributions;
  std::string note;

  // ValidationError naming the instance if `dist` is unknown.
  const NamedDistribution& Distribution(const std::string& dist) const;
};

// Actions H = 0, T = 1. Player 0 wins (payoff 1) on a match, player 1 on a
// mismatch. Distribution "uniform_ne".
LabeledInstance MatchingPennies();

// 2 * n_pairs players; players 2p and 2p+1 play matching pennies with each
// other (2p is the matcher) and ignore everyone else. Distribution
// "all_uniform". CapabilityError when the dense game would be too large
// (n_pairs > 8); large-n experiments use the pair decomposition instead.
LabeledInstance PairsMatchingPennies(int n_pairs);

// Player 0 picks i in [2b]; player 1 picks a b-subset S of [2b] (subsets in
// lexicographic order). u_1(i,S) = 1 iff i in S, u_0 = 1 - u_1: the
// zero-sum game stored in [0,1]. Distribution "uniform_ne".
LabeledInstance AlthoferGame(int b);
// The subsets indexing player 1's actions.
std::vector<std::vector<int>> AlthoferSubsets(int b);

// Matching pennies plus a payoff-irrelevant dummy d in [m]: action r*m + d.
// Distributions "canonical_ce" (mass 1/(4m) on ((r0,d),(r1,d))) and
// "uniform_ne" (both players uniform over all 2m actions).
LabeledInstance DummyMatchingPennies(int m);
inline int DummyAction(int m, int real, int dummy) { return real * m + dummy; }

// y_b: for each d, mass 1/m on ((r0,d),(r1,d)) with (r0,r1) encoded in the
// two bits of codes[d] (r0 = code >> 1, r1 = code & 1). Player 0's CE regret
// is the fraction of dummies with r0 != r1 and player 1's the rest, so the
// larger one is always at least 1/2.
JointDistribution DummyYb(const Game& game, int m, std::span<const int> codes);
std::vector<int> RandomYbCodes(int m, Rng& rng);

// prod_{t<k} (1 - t/m): the chance that k draws of a uniform dummy in [m]
// are all distinct.
double OmegaProbability(int m, int k);

struct ZooEntry {
  std::string name;
  std::string parameter;  // empty if none
  int default_parameter = 0;
  std::string note;
};
const std::vector<ZooEntry>& ZooCatalog();
// ValidationError for an unknown name.
LabeledInstance MakeInstance(const std::string& name, int parameter);

}  // namespace eqsamp

#endif  // EQSAMP_ZOO_H_
