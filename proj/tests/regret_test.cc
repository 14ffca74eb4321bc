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

#include "eqsamp/regret.h"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "eqsamp/errors.h"
#include "eqsamp/zoo.h"

namespace eqsamp {
namespace {

Game RandomTwoPlayer(std::mt19937_64& gen, int m0, int m1) {
  std::uniform_real_distribution<double> payoff(0.0, 1.0);
  return Game::FromPayoffFunction({m0, m1},
                                  [&](int, std::span<const int>) { return payoff(gen); });
}

JointDistribution RandomSparseJoint(std::mt19937_64& gen, const Game& g) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<JointEntry> entries;
  double total = 0.0;
  for (std::uint64_t i = 0; i < g.NumProfiles(); ++i) {
    if (unit(gen) < 0.5) continue;
    const double w = unit(gen);
    entries.push_back({ProfileIndex{i}, w});
    total += w;
  }
  if (entries.empty()) return JointDistribution::PointMass(ProfileIndex{0});
  for (auto& e : entries) e.probability /= total;
  return JointDistribution(std::move(entries));
}

ProductDistribution RandomProduct(std::mt19937_64& gen, const Game& g) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> strategies;
  for (int m : g.ActionCounts()) {
    std::vector<double> s(m);
    double total = 0.0;
    for (double& p : s) total += (p = unit(gen));
    for (double& p : s) p /= total;
    strategies.push_back(std::move(s));
  }
  return ProductDistribution(std::move(strategies));
}

const ProfileIndex kDiagonal[] = {ProfileIndex{0}, ProfileIndex{3}};

TEST_CASE("Nash deviation gains in matching pennies") {
  const Game mp = MatchingPennies().game;
  const auto uniform = ProductDistribution::Uniform(mp);
  CHECK(NashDeviationGain(mp, uniform, 0, 0) == doctest::Approx(0.0));
  const ProductDistribution heads_vs_uniform({{1.0, 0.0}, {0.5, 0.5}});
  CHECK(NashDeviationGain(mp, heads_vs_uniform, 1, 1) == doctest::Approx(0.5));
  CHECK_THROWS_AS(NashDeviationGain(mp, uniform, 0, 2), ValidationError);

  std::mt19937_64 gen(1);
  for (int t = 0; t < 20; ++t) {
    const Game g = RandomTwoPlayer(gen, 3, 4);
    const ProductDistribution x = RandomProduct(gen, g);
    for (int i = 0; i < 2; ++i) {
      const auto payoffs = DeviationPayoffs(g, x, i);
      const int best = static_cast<int>(std::max_element(payoffs.begin(), payoffs.end()) -
                                        payoffs.begin());
      CHECK(NashDeviationGain(g, x, i, best) >= -1e-15);
    }
  }
}

TEST_CASE("eps-Nash verification") {
  const LabeledInstance mp = MatchingPennies();
  CHECK(IsEpsNash(mp.game, ProductDistribution::Uniform(mp.game), 0.0).passed);
  const auto& hh = std::get<ProductDistribution>(mp.Distribution("pure_hh"));
  const Verification v = IsEpsNash(mp.game, hh, 0.9);
  CHECK_FALSE(v.passed);
  CHECK(*v.report.players[1].nash_gain == 1.0);
  CHECK(*v.report.players[1].nash_witness == 1);
  CHECK(v.report.MaxNashGain() == 1.0);
  CHECK_THROWS_AS(IsEpsNash(mp.game, hh, -0.1), ArgumentError);

  std::mt19937_64 gen(2);
  for (int t = 0; t < 20; ++t) {
    const Game g = RandomTwoPlayer(gen, 1 + t % 4, 2 + t % 3);
    CHECK(IsEpsNash(g, RandomProduct(gen, g), 1.0).passed);
  }
}

TEST_CASE("external regret against fixed actions") {
  const Game mp = MatchingPennies().game;
  const auto diagonal = JointDistribution::UniformOver(kDiagonal);
  CHECK(CceRegret(mp, diagonal, 1, 0) == doctest::Approx(0.5));
  const auto product = JointDistribution::FromProduct(mp, ProductDistribution::Uniform(mp));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(CceRegret(mp, product, i, j) == doctest::Approx(0.0));
  }
  const auto point = JointDistribution::PointMass(ProfileIndex{1});
  CHECK(CceRegret(mp, point, 0, 0) == 0.0);
  CHECK(CceRegret(mp, point, 1, 1) == 0.0);
}

TEST_CASE("eps-CCE verification") {
  const Game mp = MatchingPennies().game;
  const auto diagonal = JointDistribution::UniformOver(kDiagonal);
  CHECK(IsEpsCce(mp, diagonal, 0.5).passed);
  CHECK_FALSE(IsEpsCce(mp, diagonal, 0.49).passed);
  CHECK(IsEpsCce(mp, JointDistribution::UniformAll(mp), 0.0).passed);
  std::mt19937_64 gen(3);
  for (int t = 0; t < 20; ++t) {
    const Game g = RandomTwoPlayer(gen, 3, 3);
    CHECK(IsEpsCce(g, RandomSparseJoint(gen, g), 1.0).passed);
  }
}

TEST_CASE("switching-rule regret and its witness") {
  const Game mp = MatchingPennies().game;
  const auto diagonal = JointDistribution::UniformOver(kDiagonal);
  const SwitchingRegret s = CeMaxRegret(mp, diagonal, 1);
  CHECK(s.value == doctest::Approx(1.0));
  CHECK(s.witness == SwitchingRule{1, 0});
  CHECK(CeMaxRegretBruteforce(mp, diagonal, 1) == doctest::Approx(1.0));
  for (int i = 0; i < 2; ++i) {
    CHECK(CeMaxRegret(mp, JointDistribution::UniformAll(mp), i).value == doctest::Approx(0.0));
  }
  // Unrecommended actions keep the identity (lowest index on ties).
  const SwitchingRegret point = CeMaxRegret(mp, JointDistribution::PointMass(ProfileIndex{0}), 1);
  CHECK(point.witness == SwitchingRule{1, 0});
}

TEST_CASE("eps-CE verification") {
  const LabeledInstance dummy = DummyMatchingPennies(6);
  CHECK(IsEpsCe(dummy.game, std::get<JointDistribution>(dummy.Distribution("canonical_ce")), 0.0)
            .passed);
  const Game mp = MatchingPennies().game;
  CHECK_FALSE(IsEpsCe(mp, JointDistribution::UniformOver(kDiagonal), 0.99).passed);
  CHECK(IsEpsCe(mp, JointDistribution::UniformOver(kDiagonal), 1.0).passed);
}

TEST_CASE("brute force enumerates every switching rule") {
  std::mt19937_64 gen(4);
  const Game two = RandomTwoPlayer(gen, 2, 3);
  const Game three = RandomTwoPlayer(gen, 3, 2);
  CHECK_NOTHROW(CeMaxRegretBruteforce(two, RandomSparseJoint(gen, two), 0));
  CHECK_NOTHROW(CeMaxRegretBruteforce(three, RandomSparseJoint(gen, three), 0));
  const Game big = Game::FromPayoffFunction({8, 1}, [](int, std::span<const int>) { return 0.0; });
  CHECK_THROWS_AS(CeMaxRegretBruteforce(big, JointDistribution::UniformAll(big), 0),
                  CapabilityError);
}

TEST_CASE("decomposed switching-rule regret equals the brute-force maximum") {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 200; ++t) {
    const int m0 = 2 + t % 3;
    const int m1 = 2 + (t / 3) % 3;
    const Game g = RandomTwoPlayer(gen, m0, m1);
    const JointDistribution x = RandomSparseJoint(gen, g);
    for (int i = 0; i < 2; ++i) {
      REQUIRE(std::abs(CeMaxRegret(g, x, i).value - CeMaxRegretBruteforce(g, x, i)) < 1e-12);
    }
  }
}

TEST_CASE("regret orderings") {
  std::mt19937_64 gen(6);
  for (int t = 0; t < 100; ++t) {
    const Game g = RandomTwoPlayer(gen, 2 + t % 3, 2 + t % 4);
    const RegretReport r = JointRegretReport(g, RandomSparseJoint(gen, g));
    for (const PlayerRegret& p : r.players) {
      CHECK(*p.cce_regret >= 0.0);
      CHECK(*p.cce_regret <= *p.ce_regret + 1e-12);
    }
    const ProductDistribution x = RandomProduct(gen, g);
    const JointDistribution joint = JointDistribution::FromProduct(g, x);
    for (double eps : {0.0, 0.05, 0.1, 0.2, 0.4}) {
      if (IsEpsNash(g, x, eps).passed) CHECK(IsEpsCe(g, joint, eps).passed);
      if (IsEpsCe(g, joint, eps).passed) CHECK(IsEpsCce(g, joint, eps).passed);
    }
  }
}

TEST_CASE("regrets ignore the order in which support profiles are listed") {
  std::mt19937_64 gen(7);
  const Game g = RandomTwoPlayer(gen, 4, 3);
  const JointDistribution x = RandomSparseJoint(gen, g);
  std::vector<JointEntry> shuffled(x.Entries().begin(), x.Entries().end());
  std::shuffle(shuffled.begin(), shuffled.end(), gen);
  const JointDistribution y(shuffled);
  for (int i = 0; i < 2; ++i) {
    CHECK(CeMaxRegret(g, x, i).value == CeMaxRegret(g, y, i).value);
    CHECK(CceRegret(g, x, i, 0) == CceRegret(g, y, i, 0));
  }
}

TEST_CASE("regret report JSON") {
  const Game mp = MatchingPennies().game;
  const nlohmann::json j = JointRegretReport(mp, JointDistribution::UniformOver(kDiagonal)).ToJson();
  REQUIRE(j.size() == 2);
  CHECK(j[1]["player"] == 1);
  CHECK(j[1]["ce_regret"].get<double>() == doctest::Approx(1.0));
  CHECK(j[1]["cce_regret"].get<double>() == doctest::Approx(0.5));
  CHECK(j[1]["witnesses"]["ce"] == nlohmann::json::array({1, 0}));
  CHECK_FALSE(j[1].contains("nash_gain"));
}

}  // namespace
}  // namespace eqsamp
