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

#include "eqsamp/thresholds.h"

#include <cmath>

#include "doctest.h"
#include "eqsamp/errors.h"

namespace eqsamp {
namespace {

// Reference values evaluated with 40-digit arithmetic.
struct Frozen {
  ThresholdResult (*fn)(double, double, int, int);
  double eps, alpha;
  int n, m;
  double raw;
  std::int64_t k;
};

void CheckRaw(const ThresholdResult& r, double raw, std::int64_t k) {
  CHECK(r.raw_bound == doctest::Approx(raw).epsilon(1e-12));
  CHECK(r.k == k);
}

TEST_CASE("closed forms match high-precision references") {
  const Frozen cases[] = {
      {KNash, 0.1, 0.05, 2, 2, 7011.2426154782106, 7012},
      {KNashTest, 0.2, 0.1, 2, 2, 15987.305349007464, 15988},
      {KCe, 0.1, 0.05, 2, 2, 1015.0347630467654, 1016},
      {KCeTest, 0.2, 0.1, 2, 2, 876.40532693477632, 877},
      {KCce, 0.1, 0.05, 2, 2, 876.40532693477632, 877},
      {KCceTest, 0.1, 0.05, 2, 2, 3505.6213077391053, 3506},
  };
  for (const Frozen& c : cases) CheckRaw(c.fn(c.eps, c.alpha, c.n, c.m), c.raw, c.k);
  CheckRaw(KNashSupport(0.5, 2, 2), 133.0842586675095, 134);
  CheckRaw(KCeSupport(0.5, 2, 2), 14206.03471553338, 14207);
  CheckRaw(KCceSupport(0.1, 2, 2), 277.25887222397812, 278);

  // Values used by the Monte Carlo suites.
  CHECK(KNash(0.3, 0.1, 2, 2).k == 620);
  CHECK(KNashTest(0.3, 0.1, 2, 2).k == 6782);
  CHECK(KCe(0.3, 0.1, 2, 2).k == 98);
  CHECK(KCeTest(0.3, 0.1, 2, 2).k == 390);
  CHECK(KCce(0.3, 0.1, 2, 2).k == 82);
  CHECK(KCceTest(0.3, 0.1, 2, 2).k == 328);
  CHECK(KCce(0.5, 0.1, 256, 2).k == 69);
  CHECK(KCce(0.25, 0.1, 2, 20).k == 192);
}

TEST_CASE("k is the smallest integer strictly above the bound") {
  for (double eps : {0.05, 0.1, 0.25, 0.5, 0.9}) {
    const ThresholdResult r = KCce(eps, 0.1, 3, 4);
    CHECK(static_cast<double>(r.k) > r.raw_bound);
    CHECK(static_cast<double>(r.k - 1) <= r.raw_bound);
  }
}

TEST_CASE("algebraic identities between bounds") {
  const double eps = 0.2;
  const double shift = 8.0 * std::log(2.0) / (eps * eps);
  CHECK(KNash(eps, 0.05, 3, 4).raw_bound - KNash(eps, 0.1, 3, 4).raw_bound ==
        doctest::Approx(shift));
  CHECK(KNash(eps, 0.1, 3, 16).raw_bound - KNash(eps, 0.1, 3, 4).raw_bound ==
        doctest::Approx(8.0 * std::log(4.0) / (eps * eps)));
  CHECK(KNashSupport(eps, 3, 4).raw_bound ==
        doctest::Approx(8.0 * (std::log(4.0) + std::log(3.0) - std::log(eps) + std::log(8.0)) /
                        (eps * eps)));
  CHECK(KCeTest(eps, 0.1, 3, 4).raw_bound == doctest::Approx(4.0 * KCe(eps, 0.1, 3, 4).raw_bound));
  CHECK(KCceTest(eps, 0.1, 3, 4).raw_bound == doctest::Approx(4.0 * KCce(eps, 0.1, 3, 4).raw_bound));
  for (int m = 2; m < 10; ++m) {
    CHECK(KCe(eps, 0.1, 3, m + 1).raw_bound - KCe(eps, 0.1, 3, m).raw_bound ==
          doctest::Approx(2.0 * ((m + 1) * std::log(m + 1.0) - m * std::log(m)) / (eps * eps)));
    CHECK(KNashTest(eps, 0.1, 3, m).raw_bound > KNash(eps, 0.1, 3, m).raw_bound);
  }
}

TEST_CASE("bounds are monotone in every argument") {
  using Fn = ThresholdResult (*)(double, double, int, int);
  const Fn fns[] = {KNash, KNashTest, KCe, KCeTest, KCce, KCceTest};
  const double grid[] = {0.05, 0.1, 0.2, 0.4, 0.8};
  for (Fn fn : fns) {
    for (int i = 0; i + 1 < 5; ++i) {
      CHECK(fn(grid[i + 1], 0.1, 3, 3).raw_bound <= fn(grid[i], 0.1, 3, 3).raw_bound);
      CHECK(fn(0.2, grid[i + 1], 3, 3).raw_bound <= fn(0.2, grid[i], 3, 3).raw_bound);
    }
    for (int v = 2; v < 12; ++v) {
      CHECK(fn(0.2, 0.1, v + 1, 3).raw_bound >= fn(0.2, 0.1, v, 3).raw_bound);
      CHECK(fn(0.2, 0.1, 3, v + 1).raw_bound >= fn(0.2, 0.1, 3, v).raw_bound);
      CHECK(fn(0.2, 0.1, v, v).raw_bound > 0.0);
      CHECK(fn(0.2, 0.1, v, v).k >= 1);
    }
  }
  for (int v = 2; v < 12; ++v) {
    CHECK(KCeSupport(0.3, 3, v + 1).raw_bound >= KCeSupport(0.3, 3, v).raw_bound);
    CHECK(KCceSupport(0.3, v + 1, 3).raw_bound >= KCceSupport(0.3, v, 3).raw_bound);
    CHECK(KNashSupport(0.3, 3, v + 1).raw_bound >= KNashSupport(0.3, 3, v).raw_bound);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(KNash(0.0, 0.1, 2, 2), ArgumentError);
  CHECK_THROWS_AS(KNash(1.0, 0.1, 2, 2), ArgumentError);
  CHECK_THROWS_AS(KCe(0.1, 0.0, 2, 2), ArgumentError);
  CHECK_THROWS_AS(KCce(0.1, 0.1, 0, 2), ArgumentError);
  CHECK_THROWS_AS(KCeSupport(0.1, 2, 1), ArgumentError);
  CHECK_NOTHROW(KCceSupport(0.1, 1, 1));
  CHECK(KCceSupport(0.1, 1, 1).k == 1);
  CHECK_THROWS_AS(Threshold(EquilibriumKind::kNash, Purpose::kTest, 0.1, std::nullopt, 2, 2),
                  ArgumentError);
}

TEST_CASE("dispatch by kind and purpose") {
  CHECK(Threshold(EquilibriumKind::kCe, Purpose::kTest, 0.2, 0.1, 2, 2).k == 877);
  CHECK(Threshold(EquilibriumKind::kCce, Purpose::kSupportSize, 0.1, std::nullopt, 2, 2).k == 278);
  CHECK(Threshold(EquilibriumKind::kNash, Purpose::kConvergence, 0.1, 0.05, 2, 2).k == 7012);
  CHECK(ParseKind("cce") == EquilibriumKind::kCce);
  CHECK(ParsePurpose("support") == Purpose::kSupportSize);
  CHECK(ToString(ParseKind("ce")) == "ce");
  CHECK_THROWS_AS(ParseKind("nash2"), ArgumentError);
  CHECK_THROWS_AS(ParsePurpose("speed"), ArgumentError);
}

TEST_CASE("square-root lower bound for correlated tests") {
  CHECK(CorImLowerBound(200) == doctest::Approx(10.0));
  CHECK(CorImLowerBound(2) == doctest::Approx(1.0));
  CHECK(CorImLowerBound(50) == doctest::Approx(5.0));
}

TEST_CASE("solver running-time bound") {
  const SolverTimeBound b = SolverTimeBoundFor(2, 2, 3);
  CHECK(b.by_actions.exact);
  CHECK(b.by_actions.value == 64);
  CHECK(b.by_counts.value == 81);
  CHECK(b.Min().value == 64);

  const SolverTimeBound big = SolverTimeBoundFor(4, 10, 20);
  CHECK_FALSE(big.by_actions.exact);  // 10^80
  CHECK(big.by_actions.log2_value == doctest::Approx(80 * std::log2(10.0)));
  CHECK(big.by_counts.exact == false);  // 20^40
  CHECK(&big.Min() == &big.by_counts);

  const SolverTimeBound edge = SolverTimeBoundFor(1, 2, 62);
  CHECK(edge.by_actions.exact);
  CHECK(edge.by_actions.value == (std::uint64_t{1} << 62));
  CHECK_FALSE(SolverTimeBoundFor(1, 2, 63).by_actions.exact);
  CHECK(SolverTimeBoundFor(3, 1, 5).by_actions.value == 1);
}

}  // namespace
}  // namespace eqsamp
