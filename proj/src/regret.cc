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

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "eqsamp/errors.h"

namespace eqsamp {
namespace {

void CheckEps(double eps) {
  if (!(eps >= 0.0)) {
    throw ArgumentError(fmt::format("eps must be nonnegative, got {}", eps));
  }
}

// gains[r][j] = sum over support profiles a with a_i = r of
// x(a) * (u_i(j, a_{-i}) - u_i(a)).
std::vector<std::vector<double>> RecommendationGains(const Game& game,
                                                     const JointDistribution& x,
                                                     int player) {
  const int m = game.NumActions(player);
  const std::uint64_t stride = game.Stride(player);
  const std::span<const double> u = game.Utilities(player);
  std::vector<std::vector<double>> gains(m, std::vector<double>(m, 0.0));
  for (const JointEntry& e : x.Entries()) {
    const int r = game.ActionOf(e.index, player);
    const std::uint64_t base = e.index.value - static_cast<std::uint64_t>(r) * stride;
    const double current = u[e.index.value];
    auto& row = gains[r];
    for (int j = 0; j < m; ++j) {
      if (j == r) continue;
      row[j] += e.probability * (u[base + static_cast<std::uint64_t>(j) * stride] - current);
    }
  }
  return gains;
}

std::vector<double> CceValues(const Game& game, const JointDistribution& x,
                              int player) {
  const auto gains = RecommendationGains(game, x, player);
  std::vector<double> values(game.NumActions(player), 0.0);
  for (const auto& row : gains) {
    for (std::size_t j = 0; j < row.size(); ++j) values[j] += row[j];
  }
  return values;
}

template <typename Get>
double MaxOver(const std::vector<PlayerRegret>& players, Get get) {
  double best = 0.0;
  for (const PlayerRegret& p : players) {
    if (const auto v = get(p)) best = std::max(best, *v);
  }
  return best;
}

}  // namespace

double RegretReport::MaxNashGain() const {
  return MaxOver(players, [](const PlayerRegret& p) { return p.nash_gain; });
}

double RegretReport::MaxCeRegret() const {
  return MaxOver(players, [](const PlayerRegret& p) { return p.ce_regret; });
}

double RegretReport::MaxCceRegret() const {
  return MaxOver(players, [](const PlayerRegret& p) { return p.cce_regret; });
}

nlohmann::json RegretReport::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < players.size(); ++i) {
    const PlayerRegret& p = players[i];
    nlohmann::json row;
    row["player"] = i;
    nlohmann::json witnesses = nlohmann::json::object();
    if (p.nash_gain) row["nash_gain"] = *p.nash_gain;
    if (p.ce_regret) row["ce_regret"] = *p.ce_regret;
    if (p.cce_regret) row["cce_regret"] = *p.cce_regret;
    if (p.nash_witness) witnesses["nash"] = *p.nash_witness;
    if (p.ce_witness) witnesses["ce"] = *p.ce_witness;
    if (p.cce_witness) witnesses["cce"] = *p.cce_witness;
    row["witnesses"] = std::move(witnesses);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<double> DeviationPayoffs(const Game& game,
                                     const ProductDistribution& x, int player) {
  game.CheckPlayer(player);
  x.CheckFits(game);
  const int n = game.NumPlayers();
  const std::uint64_t stride = game.Stride(player);
  const std::span<const double> u = game.Utilities(player);
  std::vector<std::vector<int>> supports(n);
  for (int i = 0; i < n; ++i) {
    supports[i] = i == player ? std::vector<int>{0} : x.Support(i);
  }
  std::vector<double> payoffs(game.NumActions(player), 0.0);
  std::vector<std::size_t> position(n, 0);
  for (;;) {
    double weight = 1.0;
    std::uint64_t base = 0;
    for (int i = 0; i < n; ++i) {
      if (i == player) continue;
      const int a = supports[i][position[i]];
      weight *= x.Prob(i, a);
      base += static_cast<std::uint64_t>(a) * game.Stride(i);
    }
    for (std::size_t a = 0; a < payoffs.size(); ++a) {
      payoffs[a] += weight * u[base + a * stride];
    }
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++position[i] < supports[i].size()) break;
      position[i] = 0;
    }
    if (i < 0) break;
  }
  return payoffs;
}

double NashDeviationGain(const Game& game, const ProductDistribution& x,
                         int player, int action) {
  game.CheckAction(player, action);
  const auto payoffs = DeviationPayoffs(game, x, player);
  double value = 0.0;
  for (std::size_t a = 0; a < payoffs.size(); ++a) {
    value += x.Prob(player, static_cast<int>(a)) * payoffs[a];
  }
  return payoffs[action] - value;
}

Verification IsEpsNash(const Game& game, const ProductDistribution& x,
                       double eps) {
  CheckEps(eps);
  x.CheckFits(game);
  Verification result;
  result.passed = true;
  for (int i = 0; i < game.NumPlayers(); ++i) {
    const auto payoffs = DeviationPayoffs(game, x, i);
    double value = 0.0;
    for (std::size_t a = 0; a < payoffs.size(); ++a) {
      value += x.Prob(i, static_cast<int>(a)) * payoffs[a];
    }
    const auto best = std::max_element(payoffs.begin(), payoffs.end());
    PlayerRegret p;
    p.nash_gain = *best - value;
    p.nash_witness = static_cast<int>(best - payoffs.begin());
    if (*p.nash_gain > eps + kTolerance) result.passed = false;
    result.report.players.push_back(std::move(p));
  }
  return result;
}

double CceRegret(const Game& game, const JointDistribution& x, int player,
                 int action) {
  game.CheckAction(player, action);
  x.CheckFits(game);
  return CceValues(game, x, player)[action];
}

Verification IsEpsCce(const Game& game, const JointDistribution& x,
                      double eps) {
  CheckEps(eps);
  x.CheckFits(game);
  Verification result;
  result.passed = true;
  for (int i = 0; i < game.NumPlayers(); ++i) {
    const auto values = CceValues(game, x, i);
    const auto best = std::max_element(values.begin(), values.end());
    PlayerRegret p;
    p.cce_regret = std::max(0.0, *best);
    p.cce_witness = static_cast<int>(best - values.begin());
    if (*p.cce_regret > eps + kTolerance) result.passed = false;
    result.report.players.push_back(std::move(p));
  }
  return result;
}

SwitchingRegret CeMaxRegret(const Game& game, const JointDistribution& x,
                            int player) {
  game.CheckPlayer(player);
  x.CheckFits(game);
  const auto gains = RecommendationGains(game, x, player);
  SwitchingRegret result;
  result.witness.resize(gains.size());
  for (std::size_t r = 0; r < gains.size(); ++r) {
    const auto best = std::max_element(gains[r].begin(), gains[r].end());
    result.value += *best;
    result.witness[r] = static_cast<int>(best - gains[r].begin());
  }
  return result;
}

double CeMaxRegretBruteforce(const Game& game, const JointDistribution& x,
                             int player) {
  game.CheckPlayer(player);
  x.CheckFits(game);
  const int m = game.NumActions(player);
  std::uint64_t rules = 1;
  for (int r = 0; r < m; ++r) {
    rules *= static_cast<std::uint64_t>(m);
    if (rules > 1'000'000) {
      throw CapabilityError(fmt::format(
          "brute-force switching-rule enumeration needs {}^{} rules", m, m));
    }
  }
  const std::uint64_t stride = game.Stride(player);
  const std::span<const double> u = game.Utilities(player);
  std::vector<int> rule(m, 0);
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t count = 0; count < rules; ++count) {
    double value = 0.0;
    for (const JointEntry& e : x.Entries()) {
      const int r = game.ActionOf(e.index, player);
      const std::uint64_t swapped =
          e.index.value + (static_cast<std::uint64_t>(rule[r]) - r) * stride;
      value += e.probability * (u[swapped] - u[e.index.value]);
    }
    best = std::max(best, value);
    for (int r = m - 1; r >= 0; --r) {
      if (++rule[r] < m) break;
      rule[r] = 0;
    }
  }
  return best;
}

Verification IsEpsCe(const Game& game, const JointDistribution& x,
                     double eps) {
  CheckEps(eps);
  x.CheckFits(game);
  Verification result;
  result.passed = true;
  for (int i = 0; i < game.NumPlayers(); ++i) {
    SwitchingRegret s = CeMaxRegret(game, x, i);
    PlayerRegret p;
    p.ce_regret = s.value;
    p.ce_witness = std::move(s.witness);
    if (*p.ce_regret > eps + kTolerance) result.passed = false;
    result.report.players.push_back(std::move(p));
  }
  return result;
}

RegretReport JointRegretReport(const Game& game, const JointDistribution& x) {
  x.CheckFits(game);
  RegretReport report;
  for (int i = 0; i < game.NumPlayers(); ++i) {
    SwitchingRegret s = CeMaxRegret(game, x, i);
    const auto values = CceValues(game, x, i);
    const auto best = std::max_element(values.begin(), values.end());
    PlayerRegret p;
    p.ce_regret = s.value;
    p.ce_witness = std::move(s.witness);
    p.cce_regret = std::max(0.0, *best);
    p.cce_witness = static_cast<int>(best - values.begin());
    report.players.push_back(std::move(p));
  }
  return report;
}

}  // namespace eqsamp
