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

#ifndef EQSAMP_SOLVER_H_
#define EQSAMP_SOLVER_H_

// Exhaustive search over k-uniform strategy profiles for an eps-Nash
// equilibrium. Every game has a k-uniform eps-Nash equilibrium once k exceeds
// KNashSupport(eps, n, m), so the search is complete from that k on.

#include <cstdint>
#include <optional>
#include <vector>

#include "eqsamp/distributions.h"
#include "eqsamp/game.h"
#include "eqsamp/parallel.h"
#include "json.hpp"

namespace eqsamp {

inline constexpr std::uint64_t kDefaultCandidateCap = 100'000'000;

// Counts (c_1..c_m), c_j >= 0, sum = k. The strategy is c_j / k.
using Composition = std::vector<int>;

// C(k+m-1, m-1), or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> CompositionCount(int m, int k);

// Streams the compositions of k into m parts in lexicographic order:
// (0,..,0,k), (0,..,1,k-1), ..., (k,0,..,0).
class CompositionEnumerator {
 public:
  // ArgumentError unless m >= 1 and k >= 1.
  CompositionEnumerator(int m, int k);

  const Composition& Current() const { return current_; }
  bool Done() const { return done_; }
  void Advance();

 private:
  int k_;
  Composition current_;
  bool done_ = false;
};

// Every composition, in enumeration order. CapabilityError carrying the
// exact count if it exceeds `cap`.
std::vector<Composition> EnumerateKUniform(int m, int k,
                                           std::uint64_t cap = kDefaultCandidateCap);

struct KUniformStrategyProfile {
  int k = 0;
  std::vector<Composition> counts;  // per player
  ProductDistribution ToProduct() const;
};

struct SolverOptions {
  std::uint64_t candidate_cap = kDefaultCandidateCap;
  // Heuristic, off by default: only strategies using at most this many
  // actions are considered. Completeness no longer holds when set.
  std::optional<int> max_support;
  Execution execution = Execution::kParallel;
};

struct SolverResult {
  std::optional<KUniformStrategyProfile> profile;  // nullopt = NOT_FOUND
  std::uint64_t candidates = 0;  // size of the searched space
  std::uint64_t ordinal = 0;     // position of the returned profile
  double max_gain = 0.0;         // of the returned profile

  nlohmann::json ToJson() const;
};

// First candidate, in lexicographic order over players (player 0 most
// significant) then compositions, whose product distribution passes
// IsEpsNash(eps). The parallel scan returns the same candidate as the serial
// one. CapabilityError if the candidate count exceeds the cap.
SolverResult ExhaustiveKUniformNash(const Game& game, double eps, int k,
                                    const SolverOptions& options = {});

}  // namespace eqsamp

#endif  // EQSAMP_SOLVER_H_
