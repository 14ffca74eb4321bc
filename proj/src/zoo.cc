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

#include "eqsamp/zoo.h"

#include <fmt/format.h>

#include <algorithm>

#include "eqsamp/errors.h"
#include "eqsamp/regret.h"

namespace eqsamp {
namespace {

void Require(bool ok, const std::string& instance, const std::string& what) {
  if (!ok) {
    throw Error(fmt::format("internal: {} of {} failed verification", what, instance));
  }
}

void RequireNash(const LabeledInstance& inst, const std::string& dist) {
  const auto& x = std::get<ProductDistribution>(inst.Distribution(dist));
  Require(IsEpsNash(inst.game, x, 0.0).passed, inst.name, dist);
}

void RequireCe(const LabeledInstance& inst, const std::string& dist) {
  const auto& x = std::get<JointDistribution>(inst.Distribution(dist));
  Require(IsEpsCe(inst.game, x, 0.0).passed, inst.name, dist);
}

}  // namespace

const NamedDistribution& LabeledInstance::Distribution(
    const std::string& dist) const {
  const auto it = distributions.find(dist);
  if (it == distributions.end()) {
    std::string known;
    for (const auto& [key, value] : distributions) {
      known += known.empty() ? key : ", " + key;
    }
    throw ValidationError(fmt::format(
        "instance '{}' has no distribution '{}' (known: {})", name, dist, known));
  }
  return it->second;
}

LabeledInstance MatchingPennies() {
  Game game = Game::FromPayoffFunction({2, 2}, [](int player, std::span<const int> a) {
    const double match = a[0] == a[1] ? 1.0 : 0.0;
    return player == 0 ? match : 1.0 - match;
  });
  LabeledInstance inst{"matching_pennies", game, {},
                       "2x2 matching pennies; player 0 wins on a match"};
  inst.distributions.emplace("uniform_ne", ProductDistribution::Uniform(game));
  const int hh[] = {0, 0};
  inst.distributions.emplace("pure_hh", ProductDistribution::Pure(game, hh));
  const ProfileIndex diagonal[] = {ProfileIndex{0}, ProfileIndex{3}};
  inst.distributions.emplace("diagonal", JointDistribution::UniformOver(diagonal));
  inst.distributions.emplace("uniform_all", JointDistribution::UniformAll(game));
  RequireNash(inst, "uniform_ne");
  RequireCe(inst, "uniform_all");
  return inst;
}

LabeledInstance PairsMatchingPennies(int n_pairs) {
  if (n_pairs < 1) {
    throw ArgumentError(fmt::format("n_pairs must be >= 1, got {}", n_pairs));
  }
  if (n_pairs > 8) {
    throw CapabilityError(fmt::format(
        "a dense game with {} matching-pennies pairs has 2^{} profiles; the "
        "limit is 8 pairs",
        n_pairs, 2 * n_pairs));
  }
  std::vector<int> counts(2 * n_pairs, 2);
  Game game = Game::FromPayoffFunction(counts, [](int player, std::span<const int> a) {
    const int matcher = player & ~1;
    const double match = a[matcher] == a[matcher + 1] ? 1.0 : 0.0;
    return player == matcher ? match : 1.0 - match;
  });
  LabeledInstance inst{fmt::format("pairs_matching_pennies({})", n_pairs), game, {},
                       "independent matching-pennies pairs; player 2p matches, "
                       "player 2p+1 mismatches"};
  inst.distributions.emplace("all_uniform", ProductDistribution::Uniform(game));
  RequireNash(inst, "all_uniform");
  return inst;
}

std::vector<std::vector<int>> AlthoferSubsets(int b) {
  if (b < 1 || b > 8) {
    throw ArgumentError(fmt::format("b must lie in [1,8], got {}", b));
  }
  std::vector<std::vector<int>> subsets;
  std::vector<int> current(b);
  for (int i = 0; i < b; ++i) current[i] = i;
  const int universe = 2 * b;
  for (;;) {
    subsets.push_back(current);
    int i = b - 1;
    while (i >= 0 && current[i] == universe - b + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < b; ++j) current[j] = current[j - 1] + 1;
  }
  return subsets;
}

LabeledInstance AlthoferGame(int b) {
  const auto subsets = AlthoferSubsets(b);
  const int rows = 2 * b;
  const int cols = static_cast<int>(subsets.size());
  Game game = Game::FromPayoffFunction(
      {rows, cols}, [&subsets](int player, std::span<const int> a) {
        const auto& s = subsets[a[1]];
        const double hit = std::binary_search(s.begin(), s.end(), a[0]) ? 1.0 : 0.0;
        return player == 1 ? hit : 1.0 - hit;
      });
  LabeledInstance inst{fmt::format("althofer({})", b), game, {},
                       "player 0 picks i in [2b], player 1 a b-subset S; "
                       "player 1 scores when i is in S"};
  inst.distributions.emplace("uniform_ne", ProductDistribution::Uniform(game));
  RequireNash(inst, "uniform_ne");
  return inst;
}

LabeledInstance DummyMatchingPennies(int m) {
  if (m < 1 || m > 2048) {
    throw ArgumentError(fmt::format("m must lie in [1,2048], got {}", m));
  }
  Game game = Game::FromPayoffFunction(
      {2 * m, 2 * m}, [m](int player, std::span<const int> a) {
        const double match = a[0] / m == a[1] / m ? 1.0 : 0.0;
        return player == 0 ? match : 1.0 - match;
      });
  LabeledInstance inst{fmt::format("dummy_matching_pennies({})", m), game, {},
                       "matching pennies where each action also carries a "
                       "payoff-irrelevant dummy in [m]; action = r*m + d"};
  std::vector<JointEntry> canonical;
  for (int d = 0; d < m; ++d) {
    for (int r0 = 0; r0 < 2; ++r0) {
      for (int r1 = 0; r1 < 2; ++r1) {
        const int profile[] = {DummyAction(m, r0, d), DummyAction(m, r1, d)};
        canonical.push_back({game.Index(profile), 1.0 / (4.0 * m)});
      }
    }
  }
  inst.distributions.emplace("canonical_ce", JointDistribution(std::move(canonical)));
  inst.distributions.emplace("uniform_ne", ProductDistribution::Uniform(game));
  RequireCe(inst, "canonical_ce");
  RequireNash(inst, "uniform_ne");
  return inst;
}

JointDistribution DummyYb(const Game& game, int m, std::span<const int> codes) {
  if (game.NumPlayers() != 2 || game.NumActions(0) != 2 * m ||
      game.NumActions(1) != 2 * m) {
    throw ValidationError(fmt::format("game is not a dummy game with m = {}", m));
  }
  if (static_cast<int>(codes.size()) != m) {
    throw ValidationError(fmt::format("need {} codes, got {}", m, codes.size()));
  }
  std::vector<JointEntry> entries;
  for (int d = 0; d < m; ++d) {
    const int code = codes[d];
    if (code < 0 || code > 3) {
      throw ValidationError(fmt::format("code {} for dummy {} is not in [0,4)", code, d));
    }
    const int profile[] = {DummyAction(m, code >> 1, d), DummyAction(m, code & 1, d)};
    entries.push_back({game.Index(profile), 1.0 / m});
  }
  return JointDistribution(std::move(entries));
}

std::vector<int> RandomYbCodes(int m, Rng& rng) {
  std::vector<int> codes(m);
  for (int& c : codes) c = static_cast<int>(rng.Below(4));
  return codes;
}

double OmegaProbability(int m, int k) {
  if (m < 1 || k < 1) {
    throw ArgumentError(fmt::format("need m >= 1 and k >= 1, got m={} k={}", m, k));
  }
  double p = 1.0;
  for (int t = 0; t < k; ++t) p *= 1.0 - static_cast<double>(t) / m;
  return std::max(p, 0.0);
}

const std::vector<ZooEntry>& ZooCatalog() {
  static const std::vector<ZooEntry> catalog = {
      {"matching_pennies", "", 0,
       "2x2 matching pennies; distributions uniform_ne, pure_hh, diagonal, uniform_all"},
      {"pairs_matching_pennies", "n_pairs", 2,
       "2*n_pairs players in independent matching-pennies pairs; distribution "
       "all_uniform"},
      {"althofer", "b", 3,
       "2b elements against b-subsets; distribution uniform_ne"},
      {"dummy_matching_pennies", "m", 8,
       "matching pennies with a payoff-irrelevant dummy in [m]; distributions "
       "canonical_ce, uniform_ne"},
  };
  return catalog;
}

LabeledInstance MakeInstance(const std::string& name, int parameter) {
  const auto& catalog = ZooCatalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(),
                               [&](const ZooEntry& e) { return e.name == name; });
  if (it == catalog.end()) {
    throw ValidationError(fmt::format("unknown zoo instance '{}'", name));
  }
  const int p = parameter > 0 ? parameter : it->default_parameter;
  if (name == "matching_pennies") return MatchingPennies();
  if (name == "pairs_matching_pennies") return PairsMatchingPennies(p);
  if (name == "althofer") return AlthoferGame(p);
  return DummyMatchingPennies(p);
}

}  // namespace eqsamp
