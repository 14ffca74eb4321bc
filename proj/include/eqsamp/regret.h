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

#ifndef EQSAMP_REGRET_H_
#define EQSAMP_REGRET_H_

#include <optional>
#include <vector>

#include "eqsamp/distributions.h"
#include "eqsamp/game.h"
#include "json.hpp"

namespace eqsamp {

// f: A_i -> A_i; entry a is the replacement for recommended action a.
using SwitchingRule = std::vector<int>;

// Regrets of one player. Each field is present only if it was computed.
//
// nash_gain   max_{a_i} u_i(a_i, x_{-i}) - u_i(x)          (product x)
// ce_regret   max_f E_x[u_i(f(a_i), a_{-i}) - u_i(a)]       (joint x)
// cce_regret  max(0, max_j E_x[u_i(j, a_{-i}) - u_i(a)])    (joint x)
//
// All three include the identity deviation and are therefore >= 0. The CCE
// witness is the argmax j of the unclamped values.
struct PlayerRegret {
  std::optional<double> nash_gain;
  std::optional<int> nash_witness;
  std::optional<double> ce_regret;
  std::optional<SwitchingRule> ce_witness;
  std::optional<double> cce_regret;
  std::optional<int> cce_witness;
};

struct RegretReport {
  std::vector<PlayerRegret> players;

  double MaxNashGain() const;
  double MaxCeRegret() const;
  double MaxCceRegret() const;

  // [{"player": i, "nash_gain": .., "ce_regret": .., "cce_regret": ..,
  //   "witnesses": {"nash": a, "ce": [f(0), ...], "cce": j}}, ...]
  nlohmann::json ToJson() const;
};

// A verifier's answer together with the regrets it measured.
struct Verification {
  bool passed = false;
  RegretReport report;
};

// u_i(a_i, x_{-i}) for every a_i, by summing over the opponents' supports.
std::vector<double> DeviationPayoffs(const Game& game,
                                     const ProductDistribution& x, int player);

// u_i(a_i, x_{-i}) - u_i(x).
double NashDeviationGain(const Game& game, const ProductDistribution& x,
                         int player, int action);

// Passes iff every deviation gain is <= eps + kTolerance.
Verification IsEpsNash(const Game& game, const ProductDistribution& x,
                       double eps);

// E_{a~x}[u_i(j, a_{-i}) - u_i(a)], unclamped.
double CceRegret(const Game& game, const JointDistribution& x, int player,
                 int action);

Verification IsEpsCce(const Game& game, const JointDistribution& x,
                      double eps);

struct SwitchingRegret {
  double value = 0.0;
  SwitchingRule witness;
};

// Maximum switching-rule regret via the per-recommendation decomposition
//   sum_{a_i} max_j sum_{a_{-i}} x(a_i, a_{-i}) (u_i(j, a_{-i}) - u_i(a)),
// O(m_i * |support|) time. Witness ties go to the lowest action.
SwitchingRegret CeMaxRegret(const Game& game, const JointDistribution& x,
                            int player);

// Same maximum by enumerating all m_i^{m_i} rules. Test oracle only;
// CapabilityError when m_i^{m_i} > 10^6.
double CeMaxRegretBruteforce(const Game& game, const JointDistribution& x,
                             int player);

Verification IsEpsCe(const Game& game, const JointDistribution& x, double eps);

// Full report for a joint distribution: CE and CCE regrets of every player.
RegretReport JointRegretReport(const Game& game, const JointDistribution& x);

}  // namespace eqsamp

#endif  // EQSAMP_REGRET_H_
