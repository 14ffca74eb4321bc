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

#include <random>

#include "doctest.h"
#include "eqsamp/distributions.h"
#include "eqsamp/errors.h"
#include "eqsamp/zoo.h"

namespace eqsamp {
namespace {

Game RandomGame(std::mt19937_64& gen, int n, int max_actions) {
  std::uniform_int_distribution<int> actions(1, max_actions);
  std::uniform_real_distribution<double> payoff(0.0, 1.0);
  std::vector<int> counts(n);
  for (int& c : counts) c = actions(gen);
  return Game::FromPayoffFunction(counts,
                                  [&](int, std::span<const int>) { return payoff(gen); });
}

TEST_CASE("mixed-radix index puts player 0 most significant") {
  const Game mp = MatchingPennies().game;
  const int zero[] = {0, 0};
  const int tails_heads[] = {1, 0};
  CHECK(ProfileToIndex(mp, zero).value == 0);
  CHECK(ProfileToIndex(mp, tails_heads).value == 2);

  const Game g = Game::FromPayoffFunction({2, 3, 2}, [](int, std::span<const int>) { return 0.0; });
  const int profile[] = {1, 2, 1};
  CHECK(ProfileToIndex(g, profile).value == 11);
  CHECK(IndexToProfile(g, ProfileIndex{11}) == ActionProfile{1, 2, 1});
}

TEST_CASE("out-of-range actions name the player") {
  const Game mp = MatchingPennies().game;
  const int bad[] = {0, 2};
  try {
    ProfileToIndex(mp, bad);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("player 1") != std::string::npos);
  }
  const int short_profile[] = {0};
  CHECK_THROWS_AS(ProfileToIndex(mp, short_profile), ValidationError);
  CHECK_THROWS_AS(IndexToProfile(mp, ProfileIndex{4}), ValidationError);
}

TEST_CASE("index and profile round-trip on random games") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Game g = RandomGame(gen, 1 + trial % 4, 5);
    for (std::uint64_t i = 0; i < g.NumProfiles(); ++i) {
      const ActionProfile a = IndexToProfile(g, ProfileIndex{i});
      REQUIRE(ProfileToIndex(g, a).value == i);
    }
  }
}

TEST_CASE("pure utilities of matching pennies") {
  const Game mp = MatchingPennies().game;
  const int hh[] = {0, 0};
  const int ht[] = {0, 1};
  CHECK(PureUtility(mp, 0, hh) == 1.0);
  CHECK(PureUtility(mp, 1, hh) == 0.0);
  CHECK(PureUtility(mp, 0, ht) == 0.0);
  CHECK(PureUtility(mp, 1, ht) == 1.0);
  CHECK_THROWS_AS(PureUtility(mp, 2, hh), ValidationError);
}

TEST_CASE("expected utility under product and joint distributions") {
  const Game mp = MatchingPennies().game;
  CHECK(ExpectedUtility(mp, ProductDistribution::Uniform(mp), 0) == doctest::Approx(0.5));
  CHECK(ExpectedUtility(mp, JointDistribution::PointMass(ProfileIndex{0}), 0) == 1.0);
  const ProfileIndex diagonal[] = {ProfileIndex{0}, ProfileIndex{3}};
  CHECK(ExpectedUtility(mp, JointDistribution::UniformOver(diagonal), 1) == 0.0);

  const Game three = Game::FromPayoffFunction({3, 3}, [](int, std::span<const int>) { return 0.0; });
  CHECK_THROWS_AS(ExpectedUtility(three, ProductDistribution::Uniform(mp), 0),
                  ValidationError);
}

TEST_CASE("point mass matches pure utility and expectation is affine") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Game g = RandomGame(gen, 2 + trial % 3, 4);
    for (std::uint64_t i = 0; i < g.NumProfiles(); ++i) {
      const ActionProfile a = g.Profile(ProfileIndex{i});
      for (int p = 0; p < g.NumPlayers(); ++p) {
        REQUIRE(ExpectedUtility(g, JointDistribution::PointMass(ProfileIndex{i}), p) ==
                PureUtility(g, p, a));
      }
    }
    // Two random joints and their mixture.
    std::vector<JointEntry> xs, ys, mix;
    double sx = 0, sy = 0;
    std::vector<double> wx(g.NumProfiles()), wy(g.NumProfiles());
    for (std::uint64_t i = 0; i < g.NumProfiles(); ++i) {
      wx[i] = unit(gen);
      wy[i] = unit(gen);
      sx += wx[i];
      sy += wy[i];
    }
    const double lambda = unit(gen);
    for (std::uint64_t i = 0; i < g.NumProfiles(); ++i) {
      xs.push_back({ProfileIndex{i}, wx[i] / sx});
      ys.push_back({ProfileIndex{i}, wy[i] / sy});
      mix.push_back({ProfileIndex{i}, lambda * wx[i] / sx + (1 - lambda) * wy[i] / sy});
    }
    const JointDistribution x(xs), y(ys), z(mix);
    for (int p = 0; p < g.NumPlayers(); ++p) {
      CHECK(std::abs(ExpectedUtility(g, z, p) -
                     (lambda * ExpectedUtility(g, x, p) +
                      (1 - lambda) * ExpectedUtility(g, y, p))) < 1e-12);
    }
  }
}

TEST_CASE("game files round-trip and report distinct errors") {
  const Game mp = MatchingPennies().game;
  CHECK(LoadGame(SaveGame(mp)) == mp);

  std::mt19937_64 gen(3);
  const Game g = RandomGame(gen, 3, 4);
  const Game back = LoadGame(SaveGame(g));
  CHECK(back.ActionCounts() == g.ActionCounts());
  for (int p = 0; p < g.NumPlayers(); ++p) {
    for (std::uint64_t i = 0; i < g.NumProfiles(); ++i) {
      CHECK(back.Payoff(p, ProfileIndex{i}) == g.Payoff(p, ProfileIndex{i}));
    }
  }

  CHECK_THROWS_AS(LoadGame(R"({"players":2,"actions":[2,2],"utilities":[[1.5,0,0,1],[0,1,1,0]]})"),
                  PayoffRangeError);
  CHECK_THROWS_AS(LoadGame(R"({"players":2,"actions":[2,2],"utilities":[[1,0,0],[0,1,1,0]]})"),
                  LengthError);
  CHECK_THROWS_AS(LoadGame(R"({"players":2,"actions":[2,2],"utilities":)"), ParseError);
  CHECK_THROWS_AS(LoadGame(R"({"players":3,"actions":[2,2],"utilities":[[1,0,0,1],[0,1,1,0]]})"),
                  LengthError);
  CHECK_THROWS_AS(LoadGame(R"({"players":"two","actions":[2,2],"utilities":[]})"), ParseError);
}

TEST_CASE("constructor invariants") {
  CHECK_THROWS_AS(Game({}, {}), ValidationError);
  CHECK_THROWS_AS(Game({0}, {{}}), ValidationError);
  CHECK_THROWS_AS(Game({2}, {{0.5, -0.1}}), PayoffRangeError);
  CHECK_THROWS_AS(Game(std::vector<int>(30, 2), {}), CapabilityError);
  const Game single({1}, {{0.25}});
  CHECK(single.NumProfiles() == 1);
}

TEST_CASE("renormalization maps each player's payoffs onto [0,1]") {
  const Game g = RenormalizedGame({2, 2}, {{-1, 1, 1, -1}, {3, 3, 3, 3}});
  CHECK(g.Payoff(0, ProfileIndex{0}) == 0.0);
  CHECK(g.Payoff(0, ProfileIndex{1}) == 1.0);
  CHECK(g.Payoff(1, ProfileIndex{2}) == 0.0);
}

}  // namespace
}  // namespace eqsamp
