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

#include <fmt/format.h>

#include "eqsamp/errors.h"

namespace eqsamp {
namespace {

void CheckSpec(const TestSpec& spec) {
  if (!(spec.delta >= 0.0)) {
    throw ArgumentError(fmt::format("delta must be >= 0, got {}", spec.delta));
  }
  if (!(spec.eps > 0.0 && spec.eps < 1.0)) {
    throw ArgumentError(fmt::format("eps must lie in (0,1), got {}", spec.eps));
  }
  if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) {
    throw ArgumentError(fmt::format("alpha must lie in (0,1), got {}", spec.alpha));
  }
}

double MaxFor(EquilibriumKind kind, const RegretReport& report) {
  switch (kind) {
    case EquilibriumKind::kNash: return report.MaxNashGain();
    case EquilibriumKind::kCe: return report.MaxCeRegret();
    case EquilibriumKind::kCce: return report.MaxCceRegret();
  }
  return 0.0;
}

}  // namespace

std::string_view ToString(Answer answer) {
  return answer == Answer::kYes ? "YES" : "NO";
}

nlohmann::json TestVerdict::ToJson(const TestSpec& spec) const {
  nlohmann::json out;
  out["answer"] = std::string(ToString(answer));
  out["kind"] = std::string(ToString(spec.kind));
  out["delta"] = spec.delta;
  out["eps"] = spec.eps;
  out["alpha"] = spec.alpha;
  out["threshold_used"] = threshold_used;
  out["max_regret"] = MaxFor(spec.kind, measured);
  out["k"] = k;
  out["k_required"] = k_required;
  out["k_sufficient"] = k_sufficient;
  out["regret"] = measured.ToJson();
  return out;
}

std::int64_t RequiredTestSamples(const Game& game, const TestSpec& spec) {
  return Threshold(spec.kind, Purpose::kTest, spec.eps, spec.alpha,
                   game.NumPlayers(), game.MaxActions())
      .k;
}

TestVerdict RunTest(const Game& game, const SampleBatch& batch,
                    const TestSpec& spec) {
  CheckSpec(spec);
  batch.CheckFits(game);
  TestVerdict verdict;
  verdict.threshold_used = spec.delta + spec.eps / 2.0;
  verdict.k = batch.k();
  verdict.k_required = RequiredTestSamples(game, spec);
  verdict.k_sufficient = verdict.k >= verdict.k_required;

  Verification check;
  switch (spec.kind) {
    case EquilibriumKind::kNash:
      check = IsEpsNash(game, ProductEmpirical(batch, game), verdict.threshold_used);
      break;
    case EquilibriumKind::kCe:
      check = IsEpsCe(game, JointEmpirical(batch, game).ToJoint(),
                      verdict.threshold_used);
      break;
    case EquilibriumKind::kCce:
      check = IsEpsCce(game, JointEmpirical(batch, game).ToJoint(),
                       verdict.threshold_used);
      break;
  }
  verdict.answer = check.passed ? Answer::kYes : Answer::kNo;
  verdict.measured = std::move(check.report);
  return verdict;
}

TestVerdict TestNash(const Game& game, const SampleBatch& batch, double delta,
                     double eps, double alpha) {
  return RunTest(game, batch, {EquilibriumKind::kNash, delta, eps, alpha});
}

TestVerdict TestCe(const Game& game, const SampleBatch& batch, double delta,
                   double eps, double alpha) {
  return RunTest(game, batch, {EquilibriumKind::kCe, delta, eps, alpha});
}

TestVerdict TestCce(const Game& game, const SampleBatch& batch, double delta,
                    double eps, double alpha) {
  return RunTest(game, batch, {EquilibriumKind::kCce, delta, eps, alpha});
}

}  // namespace eqsamp
