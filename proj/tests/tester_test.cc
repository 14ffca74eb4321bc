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

#include "eqsamp/tester.h"

#include "doctest.h"
#include "eqsamp/errors.h"
#include "eqsamp/zoo.h"

namespace eqsamp {
namespace {

SampleBatch Repeated(const std::vector<int>& profile, int k) {
  std::vector<int> actions;
  for (int t = 0; t < k; ++t) actions.insert(actions.end(), profile.begin(), profile.end());
  return SampleBatch(static_cast<int>(profile.size()), actions, SeedRecord{0, 0});
}

TEST_CASE("a pure matching-pennies profile is rejected") {
  const LabeledInstance mp = MatchingPennies();
  const SampleBatch batch = Repeated({0, 0}, 50);
  CHECK(TestNash(mp.game, batch, 0.0, 0.2).answer == Answer::kNo);
  CHECK(TestCe(mp.game, batch, 0.0, 0.2).answer == Answer::kNo);
  CHECK(TestCce(mp.game, batch, 0.0, 0.2).answer == Answer::kNo);
}

TEST_CASE("a tolerance of one accepts anything in a [0,1] game") {
  const LabeledInstance mp = MatchingPennies();
  const SampleBatch batch = Repeated({1, 0}, 7);
  for (auto kind : {EquilibriumKind::kNash, EquilibriumKind::kCe, EquilibriumKind::kCce}) {
    const TestVerdict v = RunTest(mp.game, batch, {kind, 1.0, 0.1, 0.1});
    CHECK(v.answer == Answer::kYes);
    CHECK(v.threshold_used == doctest::Approx(1.05));
    CHECK(v.k == 7);
    CHECK_FALSE(v.k_sufficient);
  }
}

TEST_CASE("the answer agrees with the verifier on the empirical object") {
  const LabeledInstance mp = MatchingPennies();
  const auto& x = std::get<ProductDistribution>(mp.Distribution("uniform_ne"));
  for (std::uint64_t s = 0; s < 40; ++s) {
    const SampleBatch batch = DrawSamples(mp.game, x, 30, SeedRecord{7, s});
    const TestVerdict nash = TestNash(mp.game, batch, 0.05, 0.2);
    const bool nash_ok = IsEpsNash(mp.game, ProductEmpirical(batch, mp.game), 0.15).passed;
    CHECK((nash.answer == Answer::kYes) == nash_ok);
    const TestVerdict cce = TestCce(mp.game, batch, 0.05, 0.2);
    const bool cce_ok = IsEpsCce(mp.game, JointEmpirical(batch, mp.game).ToJoint(), 0.15).passed;
    CHECK((cce.answer == Answer::kYes) == cce_ok);
    CHECK(cce.measured.MaxCceRegret() >= 0.0);
  }
}

TEST_CASE("required samples follow the test thresholds") {
  const LabeledInstance mp = MatchingPennies();
  CHECK(RequiredTestSamples(mp.game, {EquilibriumKind::kNash, 0.0, 0.3, 0.1}) == 6782);
  CHECK(RequiredTestSamples(mp.game, {EquilibriumKind::kCe, 0.0, 0.3, 0.1}) == 390);
  CHECK(RequiredTestSamples(mp.game, {EquilibriumKind::kCce, 0.0, 0.3, 0.1}) == 328);
  const LabeledInstance al = AlthoferGame(2);  // 4 x 6
  CHECK(RequiredTestSamples(al.game, {EquilibriumKind::kCce, 0.0, 0.3, 0.1}) ==
        KCceTest(0.3, 0.1, 2, 6).k);
}

TEST_CASE("argument checks and JSON shape") {
  const LabeledInstance mp = MatchingPennies();
  const SampleBatch batch = Repeated({0, 1}, 3);
  CHECK_THROWS_AS(TestNash(mp.game, batch, -0.1, 0.2), ArgumentError);
  CHECK_THROWS_AS(TestNash(mp.game, batch, 0.0, 0.0), ArgumentError);
  CHECK_THROWS_AS(TestNash(mp.game, batch, 0.0, 0.2, 1.0), ArgumentError);
  const SampleBatch bad = Repeated({0, 2}, 3);
  CHECK_THROWS_AS(TestNash(mp.game, bad, 0.0, 0.2), ValidationError);

  const TestSpec spec{EquilibriumKind::kCe, 0.0, 0.2, 0.1};
  const auto json = RunTest(mp.game, batch, spec).ToJson(spec);
  CHECK(json["answer"] == "NO");
  CHECK(json["kind"] == "ce");
  CHECK(json["k"] == 3);
  CHECK(json["k_required"] == RequiredTestSamples(mp.game, spec));
  CHECK(json.contains("regret"));
}

TEST_CASE("acceptance and rejection rates at the required sample size") {
  const LabeledInstance mp = MatchingPennies();
  const auto& ne = std::get<ProductDistribution>(mp.Distribution("uniform_ne"));
  const auto& pure = std::get<ProductDistribution>(mp.Distribution("pure_hh"));
  const TestSpec spec{EquilibriumKind::kCce, 0.0, 0.3, 0.1};
  const std::int64_t k = RequiredTestSamples(mp.game, spec);
  int yes = 0, no = 0;
  const int trials = 60;
  for (int t = 0; t < trials; ++t) {
    yes += RunTest(mp.game, DrawSamples(mp.game, ne, k, SeedRecord{3, std::uint64_t(t)}), spec)
               .answer == Answer::kYes;
    no += RunTest(mp.game, DrawSamples(mp.game, pure, k, SeedRecord{4, std::uint64_t(t)}), spec)
              .answer == Answer::kNo;
  }
  CHECK(yes >= 54);
  CHECK(no == trials);
}

}  // namespace
}  // namespace eqsamp
