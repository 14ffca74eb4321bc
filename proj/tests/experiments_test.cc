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

#include "eqsamp/experiments.h"

#include <cmath>

#include "doctest.h"
#include "eqsamp/errors.h"
#include "eqsamp/regret.h"

namespace eqsamp {
namespace {

bool WithinThreeSigma(std::int64_t hits, std::int64_t trials, double p) {
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return std::abs(static_cast<double>(hits) / trials - p) <= 3.0 * sigma + 1e-12;
}

TEST_CASE("Wilson interval") {
  const Interval half = WilsonInterval(5, 10);
  CHECK(half.low == doctest::Approx(0.236593090512564).epsilon(1e-12));
  CHECK(half.high == doctest::Approx(0.7634069094874361).epsilon(1e-12));
  const Interval none = WilsonInterval(0, 10);
  CHECK(none.low == 0.0);
  CHECK(none.high == doctest::Approx(0.2775327998628892).epsilon(1e-12));
  const Interval all = WilsonInterval(10, 10);
  CHECK(all.high == 1.0);
  CHECK(all.low == doctest::Approx(0.7224672001371107).epsilon(1e-12));
  const Interval few = WilsonInterval(3, 200);
  CHECK(few.low == doctest::Approx(0.00511423779325831).epsilon(1e-10));
  CHECK(few.high == doctest::Approx(0.04316572879269026).epsilon(1e-10));
}

TEST_CASE("CSV layout") {
  ExperimentRow row{"convergence", "matching_pennies", "nash", 0.3, 0.0, 0.1,
                    620, 200, 199, 0.995, 0.9721, 0.9991, 42};
  const std::string csv = ToCsv({row});
  CHECK(csv ==
        "experiment,instance,kind,eps,delta,alpha,k,trials,successes,rate,wilson_lo,wilson_hi,seed\n"
        "convergence,matching_pennies,nash,0.3,0,0.1,620,200,199,0.995,0.9721,0.9991,42\n");
}

TEST_CASE("configuration checks") {
  ExperimentConfig c;
  CHECK_THROWS_AS(RunConvergence(c), ArgumentError);  // empty grid
  c.k_grid = {10, 10};
  CHECK_THROWS_AS(RunConvergence(c), ArgumentError);
  c.k_grid = {10};
  c.trials = 0;
  CHECK_THROWS_AS(RunConvergence(c), ArgumentError);
  c.trials = 5;
  c.distribution = "missing";
  CHECK_THROWS_AS(RunConvergence(c), ValidationError);
}

TEST_CASE("convergence is deterministic and schedule independent") {
  ExperimentConfig c;
  c.kind = EquilibriumKind::kCce;
  c.k_grid = {4, 16, 82};
  c.trials = 120;
  const ConvergenceCurve a = RunConvergence(c);
  const ConvergenceCurve b = RunConvergence(c);
  c.execution = Execution::kSerial;
  const ConvergenceCurve s = RunConvergence(c);
  CHECK(ToCsv(a.ToRows()) == ToCsv(b.ToRows()));
  CHECK(ToCsv(a.ToRows()) == ToCsv(s.ToRows()));
  REQUIRE(a.rows.size() == 3);
  CHECK(a.rows[2].successes >= 108);
  c.seed = 7;
  CHECK(ToCsv(RunConvergence(c).ToRows()) != ToCsv(s.ToRows()));
}

TEST_CASE("pair-by-pair evaluation matches the dense game") {
  for (int n_pairs = 1; n_pairs <= 3; ++n_pairs) {
    const LabeledInstance g = PairsMatchingPennies(n_pairs);
    const auto& x = std::get<ProductDistribution>(g.Distribution("all_uniform"));
    for (std::int64_t k : {1, 2, 3, 4, 6, 9}) {
      for (std::uint64_t s = 0; s < 25; ++s) {
        const SampleBatch batch = DrawSamples(g.game, x, k, SeedRecord{5, s});
        const PairsOutcome fast = EvaluatePairs(batch);

        bool pure = false;
        for (const auto& counts : PlayerActionCounts(batch, g.game)) {
          pure = pure || counts[0] == 0 || counts[1] == 0;
        }
        CHECK(fast.some_pure == pure);
        const ProductDistribution product = ProductEmpirical(batch, g.game);
        CHECK(fast.product_cce_pass ==
              IsEpsCce(g.game, JointDistribution::FromProduct(g.game, product), 0.5).passed);
        CHECK(fast.joint_cce_pass ==
              IsEpsCce(g.game, JointEmpirical(batch, g.game).ToJoint(), 0.5).passed);
      }
    }
  }
}

TEST_CASE("pairs experiment at small and large k") {
  const ExNStats few = RunLowerBoundExN(128, 3, 200, 42);
  CHECK(few.some_pure == 200);
  CHECK(few.product_cce_pass <= 2);
  const ExNStats many = RunLowerBoundExN(128, KCce(0.5, 0.1, 256, 2).k, 200, 42);
  CHECK(many.product_cce_pass >= 180);
  const ExNStats serial = RunLowerBoundExN(128, 3, 200, 42, Execution::kSerial);
  CHECK(serial.some_pure == few.some_pure);
  CHECK(serial.product_cce_pass == few.product_cce_pass);
  CHECK(serial.joint_cce_pass == few.joint_cce_pass);
}

TEST_CASE("small supports in the subset game stay far from equilibrium") {
  for (std::int64_t k : {3, 4}) {
    const ExAlStats s = RunLowerBoundExAl(3, k, 200, 42);
    CHECK(s.small_support_pass == 0);
    if (s.small_support > 0) {
      CHECK(4 * s.min_small_support_regret_numerator >= k);
    }
  }
  CHECK(RunLowerBoundExAl(3, 3, 200, 42).small_support == 200);
}

TEST_CASE("dummy-game sample statistics") {
  const CorMStats cor = RunCorM(64, 64, 300, 42);
  CHECK(cor.ce_pass <= 15);
  CHECK(cor.MeanExactlyOnce() == doctest::Approx(23.7299).epsilon(0.1));
  const CorMStats cor_serial = RunCorM(64, 64, 300, 42, Execution::kSerial);
  CHECK(cor_serial.exactly_once_total == cor.exactly_once_total);
  CHECK(cor_serial.exactly_once_sq_total == cor.exactly_once_sq_total);

  const NeToCeStats ne = RunNeToCe(64, 64, 300, 42);
  CHECK(ne.ce_pass <= 15);
  CHECK(ne.MeanExactlyOnce() == doctest::Approx(8.79858).epsilon(0.1));
}

TEST_CASE("distinct-dummy frequency") {
  const OmegaStats o = RunOmega(100, 10, 3000, 42);
  CHECK(o.exact == doctest::Approx(0.62815650955529472));
  CHECK(WithinThreeSigma(o.hits, o.trials, o.exact));
}

TEST_CASE("deviation of size one over root k") {
  const EpsDependenceStats s = RunEpsDependence({1, 4, 16, 64, 256}, 4000, 42);
  const double exact[] = {0.0, 0.125, 0.076812744140625, 0.059941189566999233,
                          0.052471673332143069};
  REQUIRE(s.rows.size() == 5);
  CHECK(s.rows[0].hits == 0);
  for (int i = 1; i < 5; ++i) CHECK(WithinThreeSigma(s.rows[i].hits, s.rows[i].trials, exact[i]));
  CHECK_THROWS_AS(RunEpsDependence({}, 10, 42), ArgumentError);
  CHECK_THROWS_AS(RunEpsDependence({0}, 10, 42), ArgumentError);
}

TEST_CASE("tester operating characteristic") {
  TestCharacteristicsConfig c;
  c.kind = EquilibriumKind::kCce;
  c.trials = 100;
  const TestCharacteristics t = RunTestCharacteristics(c);
  CHECK(t.k == 328);
  CHECK(t.YesRate() >= 0.85);
  CHECK(t.NoRate() >= 0.85);
  const auto rows = t.ToRows();
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].experiment == "test_characteristics:yes_on_uniform_ne");
  CHECK(rows[1].experiment == "test_characteristics:no_on_pure_hh");
}

}  // namespace
}  // namespace eqsamp
