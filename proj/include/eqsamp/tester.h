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

#ifndef EQSAMP_TESTER_H_
#define EQSAMP_TESTER_H_

// Equilibrium tests from samples. The test answers YES iff the empirical
// object (product empirical for NASH, joint empirical for CE and CCE) is a
// (delta + eps/2)-equilibrium of the requested kind. With k at least the
// matching test threshold, YES is returned with probability >= 1 - alpha on
// delta-equilibria and NO with probability >= 1 - alpha on distributions
// that are not (delta + eps)-equilibria. Between the two the answer is
// unconstrained.

#include <cstdint>
#include <string_view>

#include "eqsamp/distributions.h"
#include "eqsamp/game.h"
#include "eqsamp/regret.h"
#include "eqsamp/thresholds.h"
#include "json.hpp"

namespace eqsamp {

enum class Answer { kYes, kNo };
std::string_view ToString(Answer answer);

struct TestSpec {
  EquilibriumKind kind = EquilibriumKind::kNash;
  double delta = 0.0;
  double eps = 0.1;
  double alpha = 0.1;
};

struct TestVerdict {
  Answer answer = Answer::kNo;
  RegretReport measured;
  double threshold_used = 0.0;  // delta + eps/2
  std::int64_t k = 0;
  std::int64_t k_required = 0;
  // Reported, not enforced: callers may under-sample on purpose.
  bool k_sufficient = false;

  nlohmann::json ToJson(const TestSpec& spec) const;
};

// ArgumentError for delta < 0, eps outside (0,1) or alpha outside (0,1).
TestVerdict RunTest(const Game& game, const SampleBatch& batch,
                    const TestSpec& spec);

TestVerdict TestNash(const Game& game, const SampleBatch& batch, double delta,
                     double eps, double alpha = 0.1);
TestVerdict TestCe(const Game& game, const SampleBatch& batch, double delta,
                   double eps, double alpha = 0.1);
TestVerdict TestCce(const Game& game, const SampleBatch& batch, double delta,
                    double eps, double alpha = 0.1);

// The matching test threshold with n = player count and m = max_i m_i.
std::int64_t RequiredTestSamples(const Game& game, const TestSpec& spec);

}  // namespace eqsamp

#endif  // EQSAMP_TESTER_H_
