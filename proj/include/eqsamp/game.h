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

#ifndef EQSAMP_GAME_H_
#define EQSAMP_GAME_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqsamp {

// Equality tolerance for probabilities and payoffs.
inline constexpr double kTolerance = 1e-9;

// Upper bound on player_count * prod_i m_i for a dense game.
inline constexpr std::uint64_t kMaxUtilityEntries = std::uint64_t{1} << 24;

// Flat mixed-radix position of an action profile; player 0 is the most
// significant digit.
struct ProfileIndex {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(ProfileIndex, ProfileIndex) = default;
};

// One action per player, entry i in [0, m_i).
using ActionProfile = std::vector<int>;

class ProductDistribution;
class JointDistribution;

// A finite normal-form game with payoffs in [0,1], stored densely: one array
// per player indexed by ProfileIndex. Immutable after construction.
class Game {
 public:
  using PayoffFn = std::function<double(int player, std::span<const int> profile)>;

  // Throws LengthError if some utilities[i] has the wrong size,
  // PayoffRangeError if a payoff is outside [0,1], ValidationError for bad
  // action counts and CapabilityError past kMaxUtilityEntries.
  Game(std::vector<int> action_counts,
       std::vector<std::vector<double>> utilities);

  // Tabulates `payoff` over every profile.
  static Game FromPayoffFunction(std::vector<int> action_counts,
                                 const PayoffFn& payoff);

  int NumPlayers() const { return static_cast<int>(action_counts_.size()); }
  int NumActions(int player) const { return action_counts_[player]; }
  int MaxActions() const;
  const std::vector<int>& ActionCounts() const { return action_counts_; }
  std::uint64_t NumProfiles() const { return num_profiles_; }

  // prod_{j > player} m_j.
  std::uint64_t Stride(int player) const { return strides_[player]; }

  // Unchecked accessors for inner loops.
  int ActionOf(ProfileIndex index, int player) const {
    return static_cast<int>((index.value / strides_[player]) %
                            static_cast<std::uint64_t>(action_counts_[player]));
  }
  ProfileIndex WithAction(ProfileIndex index, int player, int action) const {
    const auto current = static_cast<std::uint64_t>(ActionOf(index, player));
    return ProfileIndex{index.value - current * strides_[player] +
                        static_cast<std::uint64_t>(action) * strides_[player]};
  }
  double Payoff(int player, ProfileIndex index) const {
    return utilities_[player][index.value];
  }
  std::span<const double> Utilities(int player) const {
    return utilities_[player];
  }

  // Checked conversions; ValidationError names the offending player.
  ProfileIndex Index(std::span<const int> profile) const;
  ActionProfile Profile(ProfileIndex index) const;

  void CheckPlayer(int player) const;
  void CheckAction(int player, int action) const;

  bool operator==(const Game& other) const = default;

 private:
  std::vector<int> action_counts_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t num_profiles_ = 0;
  std::vector<std::vector<double>> utilities_;
};

ProfileIndex ProfileToIndex(const Game& game, std::span<const int> profile);
ActionProfile IndexToProfile(const Game& game, ProfileIndex index);

// u_i(a), checked.
double PureUtility(const Game& game, int player, std::span<const int> profile);

// u_i(x) = E_{a~x} u_i(a). The product form sums over the product of the
// per-player supports; the joint form sums over the sparse support.
double ExpectedUtility(const Game& game, const ProductDistribution& x,
                       int player);
double ExpectedUtility(const Game& game, const JointDistribution& x,
                       int player);

// Affinely maps each player's raw payoffs onto [0,1] (min -> 0, max -> 1; a
// constant payoff maps to 0). Regret comparisons scale by 1/(max - min).
Game RenormalizedGame(std::vector<int> action_counts,
                      std::vector<std::vector<double>> raw_utilities);

// JSON game format:
//   {"players": n, "actions": [m_1..m_n], "utilities": [[...], ...]}
// Throws ParseError for malformed text, LengthError and PayoffRangeError for
// invariant violations.
Game LoadGame(std::string_view text);
std::string SaveGame(const Game& game);

Game ReadGameFile(const std::string& path);
void WriteGameFile(const Game& game, const std::string& path);

}  // namespace eqsamp

#endif  // EQSAMP_GAME_H_
