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

#include <fmt/format.h>

#include <cmath>

#include "eqsamp/errors.h"

namespace eqsamp {
namespace {

void CheckUnit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    throw ArgumentError(fmt::format("{} must lie in (0,1), got {}", name, value));
  }
}

void CheckSizes(int n, int m) {
  if (n < 1) throw ArgumentError(fmt::format("n must be >= 1, got {}", n));
  if (m < 1) throw ArgumentError(fmt::format("m must be >= 1, got {}", m));
}

ThresholdResult FromRaw(double raw) {
  if (!std::isfinite(raw) || raw >= 9.0e18) {
    throw CapabilityError(fmt::format("bound {} does not fit a 64-bit count", raw));
  }
  return {raw, static_cast<std::int64_t>(std::floor(raw)) + 1};
}

}  // namespace

std::string_view ToString(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kNash: return "nash";
    case EquilibriumKind::kCe: return "ce";
    case EquilibriumKind::kCce: return "cce";
  }
  return "?";
}

std::string_view ToString(Purpose purpose) {
  switch (purpose) {
    case Purpose::kConvergence: return "convergence";
    case Purpose::kSupportSize: return "support";
    case Purpose::kTest: return "test";
  }
  return "?";
}

EquilibriumKind ParseKind(std::string_view text) {
  if (text == "nash") return EquilibriumKind::kNash;
  if (text == "ce") return EquilibriumKind::kCe;
  if (text == "cce") return EquilibriumKind::kCce;
  throw ArgumentError(fmt::format("unknown equilibrium kind '{}' (nash, ce, cce)", text));
}

Purpose ParsePurpose(std::string_view text) {
  if (text == "convergence") return Purpose::kConvergence;
  if (text == "support") return Purpose::kSupportSize;
  if (text == "test") return Purpose::kTest;
  throw ArgumentError(
      fmt::format("unknown purpose '{}' (convergence, support, test)", text));
}

ThresholdResult KNash(double eps, double alpha, int n, int m) {
  CheckUnit(eps, "eps");
  CheckUnit(alpha, "alpha");
  CheckSizes(n, m);
  return FromRaw(8.0 * (std::log(m) + std::log(n) - std::log(alpha) -
                        std::log(eps) + std::log(8.0)) /
                 (eps * eps));
}

ThresholdResult KNashSupport(double eps, int n, int m) {
  CheckUnit(eps, "eps");
  CheckSizes(n, m);
  return FromRaw(8.0 * (std::log(m) + std::log(n) - std::log(eps) + std::log(8.0)) /
                 (eps * eps));
}

ThresholdResult KNashTest(double eps, double alpha, int n, int m) {
  CheckUnit(eps, "eps");
  CheckUnit(alpha, "alpha");
  CheckSizes(n, m);
  return FromRaw(72.0 * (std::log(m + 1.0) + std::log(n) - std::log(alpha) -
                         std::log(eps) + std::log(24.0)) /
                 (eps * eps));
}

ThresholdResult KCe(double eps, double alpha, int n, int m) {
  CheckUnit(eps, "eps");
  CheckUnit(alpha, "alpha");
  CheckSizes(n, m);
  return FromRaw(2.0 * (m * std::log(m) + std::log(n) - std::log(alpha)) /
                 (eps * eps));
}

ThresholdResult KCeSupport(double eps, int n, int m) {
  CheckUnit(eps, "eps");
  CheckSizes(n, m);
  if (m < 2) {
    throw ArgumentError("the CE support bound needs m >= 2 (ln m = 0 at m = 1)");
  }
  const double lm = std::log(m);
  return FromRaw(264.0 / std::pow(eps, 4) * lm *
                 (lm + std::log(n) - std::log(eps) + std::log(16.0)));
}

ThresholdResult KCeTest(double eps, double alpha, int n, int m) {
  CheckUnit(eps, "eps");
  CheckUnit(alpha, "alpha");
  CheckSizes(n, m);
  return FromRaw(8.0 * (m * std::log(m) + std::log(n) - std::log(alpha)) /
                 (eps * eps));
}

ThresholdResult KCce(double eps, double alpha, int n, int m) {
  CheckUnit(eps, "eps");
  CheckUnit(alpha, "alpha");
  CheckSizes(n, m);
  return FromRaw(2.0 * (std::log(m) + std::log(n) - std::log(alpha)) / (eps * eps));
}

ThresholdResult KCceSupport(double eps, int n, int m) {
  CheckUnit(eps, "eps");
  CheckSizes(n, m);
  return FromRaw(2.0 * (std::log(m) + std::log(n)) / (eps * eps));
}

ThresholdResult KCceTest(double eps, double alpha, int n, int m) {
  CheckUnit(eps, "eps");
  CheckUnit(alpha, "alpha");
  CheckSizes(n, m);
  return FromRaw(8.0 * (std::log(m) + std::log(n) - std::log(alpha)) / (eps * eps));
}

ThresholdResult Threshold(EquilibriumKind kind, Purpose purpose, double eps,
                          std::optional<double> alpha, int n, int m) {
  if (purpose == Purpose::kSupportSize) {
    switch (kind) {
      case EquilibriumKind::kNash: return KNashSupport(eps, n, m);
      case EquilibriumKind::kCe: return KCeSupport(eps, n, m);
      case EquilibriumKind::kCce: return KCceSupport(eps, n, m);
    }
  }
  if (!alpha) {
    throw ArgumentError(fmt::format("purpose '{}' needs alpha", ToString(purpose)));
  }
  const bool test = purpose == Purpose::kTest;
  switch (kind) {
    case EquilibriumKind::kNash:
      return test ? KNashTest(eps, *alpha, n, m) : KNash(eps, *alpha, n, m);
    case EquilibriumKind::kCe:
      return test ? KCeTest(eps, *alpha, n, m) : KCe(eps, *alpha, n, m);
    case EquilibriumKind::kCce:
      return test ? KCceTest(eps, *alpha, n, m) : KCce(eps, *alpha, n, m);
  }
  throw ArgumentError("unknown equilibrium kind");
}

double CorImLowerBound(int m) {
  if (m < 1) throw ArgumentError(fmt::format("m must be >= 1, got {}", m));
  return std::sqrt(m / 2.0);
}

namespace {

SolverCount Power(int base, std::int64_t exponent) {
  SolverCount count;
  count.log2_value = static_cast<double>(exponent) * std::log2(base);
  std::uint64_t value = 1;
  if (base == 1) {
    count.value = 1;
    return count;
  }
  constexpr std::uint64_t kLimit = (std::uint64_t{1} << 63) - 1;
  for (std::int64_t e = 0; e < exponent; ++e) {
    if (value > kLimit / static_cast<std::uint64_t>(base)) {
      count.exact = false;
      count.value = 0;
      return count;
    }
    value *= static_cast<std::uint64_t>(base);
  }
  count.value = value;
  return count;
}

}  // namespace

const SolverCount& SolverTimeBound::Min() const {
  if (by_actions.exact && by_counts.exact) {
    return by_actions.value <= by_counts.value ? by_actions : by_counts;
  }
  return by_actions.log2_value <= by_counts.log2_value ? by_actions : by_counts;
}

SolverTimeBound SolverTimeBoundFor(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1) {
    throw ArgumentError(fmt::format("need n, m, k >= 1, got {}, {}, {}", n, m, k));
  }
  return {Power(m, static_cast<std::int64_t>(n) * k),
          Power(k, static_cast<std::int64_t>(n) * m)};
}

}  // namespace eqsamp
