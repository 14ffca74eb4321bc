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

#ifndef EQSAMP_THRESHOLDS_H_
#define EQSAMP_THRESHOLDS_H_

// Closed-form sample-complexity and support-size bounds. Each bound has the
// form "k > raw_bound"; k is the smallest such integer. Natural logarithms.
//
//   kind  convergence                        support size
//   NASH  8(ln m+ln n-ln a-ln e+ln 8)/e^2    8(ln m+ln n-ln e+ln 8)/e^2
//   CE    2(m ln m+ln n-ln a)/e^2            264/e^4 ln m (ln m+ln n-ln e+ln 16)
//   CCE   2(ln m+ln n-ln a)/e^2              2(ln m+ln n)/e^2
//
//   kind  test
//   NASH  72(ln(m+1)+ln n-ln a-ln e+ln 24)/e^2
//   CE    8(m ln m+ln n-ln a)/e^2
//   CCE   8(ln m+ln n-ln a)/e^2

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace eqsamp {

enum class EquilibriumKind { kNash, kCe, kCce };
enum class Purpose { kConvergence, kSupportSize, kTest };

std::string_view ToString(EquilibriumKind kind);
std::string_view ToString(Purpose purpose);
// Accepts "nash", "ce", "cce" / "convergence", "support", "test".
EquilibriumKind ParseKind(std::string_view text);
Purpose ParsePurpose(std::string_view text);

struct ThresholdResult {
  double raw_bound = 0.0;
  std::int64_t k = 1;  // floor(raw_bound) + 1
};

// eps in (0,1); alpha in (0,1); n >= 1; m >= 1. k_ce_support additionally
// needs m >= 2. Violations throw ArgumentError.
ThresholdResult KNash(double eps, double alpha, int n, int m);
ThresholdResult KNashSupport(double eps, int n, int m);
ThresholdResult KNashTest(double eps, double alpha, int n, int m);
ThresholdResult KCe(double eps, double alpha, int n, int m);
ThresholdResult KCeSupport(double eps, int n, int m);
ThresholdResult KCeTest(double eps, double alpha, int n, int m);
ThresholdResult KCce(double eps, double alpha, int n, int m);
ThresholdResult KCceSupport(double eps, int n, int m);
ThresholdResult KCceTest(double eps, double alpha, int n, int m);

// Dispatch; alpha is ignored (and may be absent) for kSupportSize.
ThresholdResult Threshold(EquilibriumKind kind, Purpose purpose, double eps,
                          std::optional<double> alpha, int n, int m);

// sqrt(m/2): fewer samples cannot give a 1/2-test with error 1/4 for exact
// correlated equilibrium in two-player m-action games.
double CorImLowerBound(int m);

// m^{nk} and k^{nm}. Exact while the value fits in 63 bits, otherwise only
// the base-2 logarithm is meaningful.
struct SolverCount {
  bool exact = true;
  std::uint64_t value = 0;
  double log2_value = 0.0;
};
struct SolverTimeBound {
  SolverCount by_actions;  // m^{nk}
  SolverCount by_counts;   // k^{nm}
  const SolverCount& Min() const;
};
SolverTimeBound SolverTimeBoundFor(int n, int m, int k);

}  // namespace eqsamp

#endif  // EQSAMP_THRESHOLDS_H_
