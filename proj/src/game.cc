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

#include "eqsamp/game.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "eqsamp/distributions.h"
#include "eqsamp/errors.h"
#include "json.hpp"

namespace eqsamp {
namespace {

std::uint64_t CheckedProfileCount(const std::vector<int>& action_counts) {
  if (action_counts.empty()) {
    throw ValidationError("a game needs at least one player");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < action_counts.size(); ++i) {
    if (action_counts[i] < 1) {
      throw ValidationError(
          fmt::format("player {} has {} actions; need at least 1", i,
                      action_counts[i]));
    }
    total *= static_cast<std::uint64_t>(action_counts[i]);
    if (total * action_counts.size() > kMaxUtilityEntries) {
      throw CapabilityError(fmt::format(
          "dense game with action counts [{}] exceeds {} utility entries",
          fmt::join(action_counts, ","), kMaxUtilityEntries));
    }
  }
  return total;
}

}  // namespace

Game::Game(std::vector<int> action_counts,
           std::vector<std::vector<double>> utilities)
    : action_counts_(std::move(action_counts)),
      utilities_(std::move(utilities)) {
  num_profiles_ = CheckedProfileCount(action_counts_);
  const int n = NumPlayers();
  strides_.assign(n, 1);
  for (int i = n - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * static_cast<std::uint64_t>(action_counts_[i + 1]);
  }
  if (static_cast<int>(utilities_.size()) != n) {
    throw LengthError(fmt::format("expected {} utility arrays, got {}", n,
                                  utilities_.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (utilities_[i].size() != num_profiles_) {
      throw LengthError(
          fmt::format("utilities of player {} have length {}, expected {}", i,
                      utilities_[i].size(), num_profiles_));
    }
    for (std::size_t p = 0; p < utilities_[i].size(); ++p) {
      const double u = utilities_[i][p];
      if (!(u >= 0.0 && u <= 1.0)) {
        throw PayoffRangeError(fmt::format(
            "payoff {} of player {} at profile {} is outside [0,1]", u, i, p));
      }
    }
  }
}

Game Game::FromPayoffFunction(std::vector<int> action_counts,
                              const PayoffFn& payoff) {
  const std::uint64_t total = CheckedProfileCount(action_counts);
  const int n = static_cast<int>(action_counts.size());
  std::vector<std::vector<double>> utilities(n, std::vector<double>(total));
  std::vector<int> profile(n, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    for (int i = 0; i < n; ++i) utilities[i][index] = payoff(i, profile);
    for (int i = n - 1; i >= 0; --i) {
      if (++profile[i] < action_counts[i]) break;
      profile[i] = 0;
    }
  }
  return Game(std::move(action_counts), std::move(utilities));
}

int Game::MaxActions() const {
  return *std::max_element(action_counts_.begin(), action_counts_.end());
}

void Game::CheckPlayer(int player) const {
  if (player < 0 || player >= NumPlayers()) {
    throw ValidationError(fmt::format("player {} out of range [0,{})", player,
                                      NumPlayers()));
  }
}

void Game::CheckAction(int player, int action) const {
  CheckPlayer(player);
  if (action < 0 || action >= action_counts_[player]) {
    throw ValidationError(fmt::format(
        "action {} of player {} out of range [0,{})", action, player,
        action_counts_[player]));
  }
}

ProfileIndex Game::Index(std::span<const int> profile) const {
  if (static_cast<int>(profile.size()) != NumPlayers()) {
    throw ValidationError(fmt::format("profile has {} entries, game has {} players",
                                      profile.size(), NumPlayers()));
  }
  std::uint64_t index = 0;
  for (int i = 0; i < NumPlayers(); ++i) {
    CheckAction(i, profile[i]);
    index += static_cast<std::uint64_t>(profile[i]) * strides_[i];
  }
  return ProfileIndex{index};
}

ActionProfile Game::Profile(ProfileIndex index) const {
  if (index.value >= num_profiles_) {
    throw ValidationError(fmt::format("profile index {} out of range [0,{})",
                                      index.value, num_profiles_));
  }
  ActionProfile profile(NumPlayers());
  for (int i = 0; i < NumPlayers(); ++i) profile[i] = ActionOf(index, i);
  return profile;
}

ProfileIndex ProfileToIndex(const Game& game, std::span<const int> profile) {
  return game.Index(profile);
}

ActionProfile IndexToProfile(const Game& game, ProfileIndex index) {
  return game.Profile(index);
}

double PureUtility(const Game& game, int player, std::span<const int> profile) {
  game.CheckPlayer(player);
  return game.Payoff(player, game.Index(profile));
}

double ExpectedUtility(const Game& game, const ProductDistribution& x,
                       int player) {
  game.CheckPlayer(player);
  x.CheckFits(game);
  const int n = game.NumPlayers();
  std::vector<std::vector<int>> supports(n);
  for (int i = 0; i < n; ++i) supports[i] = x.Support(i);

  // Odometer over the product of supports.
  std::vector<std::size_t> position(n, 0);
  double total = 0.0;
  for (;;) {
    double weight = 1.0;
    std::uint64_t index = 0;
    for (int i = 0; i < n; ++i) {
      const int a = supports[i][position[i]];
      weight *= x.Prob(i, a);
      index += static_cast<std::uint64_t>(a) * game.Stride(i);
    }
    total += weight * game.Payoff(player, ProfileIndex{index});
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++position[i] < supports[i].size()) break;
      position[i] = 0;
    }
    if (i < 0) break;
  }
  return total;
}

double ExpectedUtility(const Game& game, const JointDistribution& x,
                       int player) {
  game.CheckPlayer(player);
  x.CheckFits(game);
  double total = 0.0;
  for (const JointEntry& entry : x.Entries()) {
    total += entry.probability * game.Payoff(player, entry.index);
  }
  return total;
}

Game RenormalizedGame(std::vector<int> action_counts,
                      std::vector<std::vector<double>> raw_utilities) {
  for (auto& row : raw_utilities) {
    if (row.empty()) continue;
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    const double low = *lo;
    const double span = *hi - *lo;
    for (double& u : row) {
      u = span > 0.0 ? std::clamp((u - low) / span, 0.0, 1.0) : 0.0;
    }
  }
  return Game(std::move(action_counts), std::move(raw_utilities));
}

Game LoadGame(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("game file is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("players") ||
      !doc.contains("actions") || !doc.contains("utilities")) {
    throw ParseError(
        "game file must be an object with players, actions and utilities");
  }
  std::vector<int> actions;
  std::vector<std::vector<double>> utilities;
  int players = 0;
  try {
    players = doc.at("players").get<int>();
    actions = doc.at("actions").get<std::vector<int>>();
    utilities = doc.at("utilities").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("game file has a field of the wrong type: {}",
                                 e.what()));
  }
  if (players != static_cast<int>(actions.size())) {
    throw LengthError(fmt::format("players = {} but {} action counts given",
                                  players, actions.size()));
  }
  return Game(std::move(actions), std::move(utilities));
}

std::string SaveGame(const Game& game) {
  nlohmann::json doc;
  doc["players"] = game.NumPlayers();
  doc["actions"] = game.ActionCounts();
  nlohmann::json utilities = nlohmann::json::array();
  for (int i = 0; i < game.NumPlayers(); ++i) {
    const auto row = game.Utilities(i);
    utilities.push_back(std::vector<double>(row.begin(), row.end()));
  }
  doc["utilities"] = std::move(utilities);
  return doc.dump() + "\n";
}

Game ReadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open game file '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadGame(buffer.str());
}

void WriteGameFile(const Game& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(fmt::format("cannot write game file '{}'", path));
  out << SaveGame(game);
}

}  // namespace eqsamp
