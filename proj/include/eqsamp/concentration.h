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

#ifndef EQSAMP_CONCENTRATION_H_
#define EQSAMP_CONCENTRATION_H_

// Monte Carlo checks of concentration for product-space empirical measures.
// For a product space (Omega, mu) = prod_i (Omega_i, mu_i), the k-sample
// approximation draws k points from every mu_i independently and takes the
// product of the n empirical measures. For f: Omega -> [0,1],
//
//   P(|E_{prod mu_i^(k)} f - E_mu f| > eps) <= 4 exp(-eps^2 k / 8) / eps,
//
// independent of n; for n = 1 classical Hoeffding gives 2 exp(-eps^2 k / 2).

#include <cstdint>
#include <vector>

#include "eqsamp/distributions.h"
#include "eqsamp/game.h"
#include "eqsamp/parallel.h"

namespace eqsamp {

// Cap on the number of terms in one exact product expectation.
inline constexpr std::uint64_t kMaxExpectationTerms = 1'000'000;

// Component distributions plus a dense table of f over prod_i Omega_i
// (mixed radix, component 0 most significant).
class ProductSpace {
 public:
  // ValidationError if a component is not a distribution, the table has the
  // wrong length or a value is outside [0,1]; CapabilityError past
  // kMaxUtilityEntries.
  ProductSpace(std::vector<std::vector<double>> components,
               std::vector<double> table);

  // Opponents of `player` as components and f(a_{-i}) = u_i(action, a_{-i}).
  static ProductSpace FromGame(const Game& game, const ProductDistribution& x,
                               int player, int action);

  int NumComponents() const { return static_cast<int>(components_.size()); }
  const std::vector<double>& Component(int i) const { return components_[i]; }
  const std::vector<double>& Table() const { return table_; }

  // E_mu[f], summing over the product of supports.
  double Expectation() const;
  // E under a product of arbitrary per-component weights, same layout.
  double ExpectationUnder(const std::vector<std::vector<double>>& weights) const;

 private:
  std::vector<std::vector<double>> components_;
  std::vector<std::uint64_t> strides_;
  std::vector<double> table_;
};

// prod_i mu_i^(k), one empirical vector per component.
std::vector<std::vector<double>> KSampleProductApproximation(
    const ProductSpace& space, std::int64_t k, SeedRecord seed);
std::vector<std::vector<double>> KSampleProductApproximation(
    const ProductSpace& space, std::int64_t k, Rng& rng);

enum class Inequality { kStrict, kNonStrict };  // "> eps" vs ">= eps"

struct RateEstimate {
  std::int64_t violations = 0;
  std::int64_t trials = 0;
  double Rate() const;
  // sqrt(p(1-p)/trials).
  double StandardError() const;
};

// Monte Carlo frequency of |E_{prod mu_i^(k)} f - E_mu f| > eps (or >= eps).
// Boundary comparisons allow 1e-12 so rational cutoffs are exact.
// CapabilityError when an exact expectation needs more than
// kMaxExpectationTerms terms.
RateEstimate ViolationRate(const ProductSpace& space, std::int64_t k,
                           double eps, std::int64_t trials,
                           std::uint64_t master_seed,
                           Inequality inequality = Inequality::kStrict,
                           Execution execution = Execution::kParallel);

// Frequency of |u_i(a_i, s^k_{-i}) - u_i(a_i, x_{-i})| >= eps.
RateEstimate DeviationViolationRate(const Game& game,
                                    const ProductDistribution& x, int player,
                                    int action, std::int64_t k, double eps,
                                    std::int64_t trials,
                                    std::uint64_t master_seed,
                                    Execution execution = Execution::kParallel);

// 4 exp(-eps^2 k / 8) / eps.
double ProductSpaceBound(double eps, std::int64_t k);
// 2 exp(-eps^2 k / 2).
double HoeffdingBound(double eps, std::int64_t k);
// 4 exp(-eps^2 k / 2) / eps, the sharper exponent stated for the
// single-deviation game view. Reported only; tests use ProductSpaceBound.
double SharpDeviationBound(double eps, std::int64_t k);

}  // namespace eqsamp

#endif  // EQSAMP_CONCENTRATION_H_
