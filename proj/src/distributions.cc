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

#include "eqsamp/distributions.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "eqsamp/errors.h"

namespace eqsamp {
namespace {

void CheckProbabilityVector(std::span<const double> probs,
                            const std::string& what) {
  if (probs.empty()) throw ValidationError(what + " is empty");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ValidationError(fmt::format("{} has invalid entry {}", what, p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kTolerance) {
    throw ValidationError(fmt::format("{} sums to {}, not 1", what, total));
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename Int>
Int ParseInteger(std::string_view text, std::string_view what) {
  text = Trim(text);
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(fmt::format("cannot parse {} from '{}'", what, text));
  }
  return value;
}

}  // namespace

ProductDistribution::ProductDistribution(
    std::vector<std::vector<double>> strategies)
    : strategies_(std::move(strategies)) {
  if (strategies_.empty()) {
    throw ValidationError("a product distribution needs at least one player");
  }
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    CheckProbabilityVector(strategies_[i],
                           fmt::format("strategy of player {}", i));
  }
}

ProductDistribution ProductDistribution::Uniform(const Game& game) {
  std::vector<std::vector<double>> strategies;
  for (int m : game.ActionCounts()) {
    strategies.emplace_back(m, 1.0 / m);
  }
  return ProductDistribution(std::move(strategies));
}

ProductDistribution ProductDistribution::Pure(const Game& game,
                                              std::span<const int> profile) {
  game.Index(profile);  // validates
  std::vector<std::vector<double>> strategies;
  for (int i = 0; i < game.NumPlayers(); ++i) {
    std::vector<double> s(game.NumActions(i), 0.0);
    s[profile[i]] = 1.0;
    strategies.push_back(std::move(s));
  }
  return ProductDistribution(std::move(strategies));
}

std::vector<int> ProductDistribution::Support(int player) const {
  std::vector<int> support;
  const auto& s = strategies_[player];
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] > 0.0) support.push_back(static_cast<int>(a));
  }
  return support;
}

void ProductDistribution::CheckFits(const Game& game) const {
  if (NumPlayers() != game.NumPlayers()) {
    throw ValidationError(fmt::format(
        "product distribution has {} players, game has {}", NumPlayers(),
        game.NumPlayers()));
  }
  for (int i = 0; i < NumPlayers(); ++i) {
    if (static_cast<int>(strategies_[i].size()) != game.NumActions(i)) {
      throw ValidationError(fmt::format(
          "strategy of player {} has {} entries, player has {} actions", i,
          strategies_[i].size(), game.NumActions(i)));
    }
  }
}

JointDistribution::JointDistribution(std::vector<JointEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const JointEntry& a, const JointEntry& b) { return a.index < b.index; });
  double total = 0.0;
  for (const JointEntry& e : entries) {
    if (!(e.probability >= 0.0) || !std::isfinite(e.probability)) {
      throw ValidationError(fmt::format("joint distribution has invalid mass {} at {}",
                                        e.probability, e.index.value));
    }
    total += e.probability;
    if (e.probability == 0.0) continue;
    if (!entries_.empty() && entries_.back().index == e.index) {
      entries_.back().probability += e.probability;
    } else {
      entries_.push_back(e);
    }
  }
  if (std::abs(total - 1.0) > kTolerance) {
    throw ValidationError(fmt::format("joint distribution sums to {}, not 1", total));
  }
}

JointDistribution JointDistribution::PointMass(ProfileIndex index) {
  return JointDistribution({JointEntry{index, 1.0}});
}

JointDistribution JointDistribution::UniformOver(
    std::span<const ProfileIndex> profiles) {
  if (profiles.empty()) throw ValidationError("uniform over an empty set");
  std::map<ProfileIndex, std::int64_t> counts;
  for (ProfileIndex p : profiles) ++counts[p];
  std::vector<JointEntry> entries;
  const double k = static_cast<double>(profiles.size());
  for (const auto& [index, c] : counts) {
    entries.push_back({index, static_cast<double>(c) / k});
  }
  return JointDistribution(std::move(entries));
}

JointDistribution JointDistribution::UniformAll(const Game& game) {
  std::vector<JointEntry> entries;
  entries.reserve(game.NumProfiles());
  const double p = 1.0 / static_cast<double>(game.NumProfiles());
  for (std::uint64_t i = 0; i < game.NumProfiles(); ++i) {
    entries.push_back({ProfileIndex{i}, p});
  }
  return JointDistribution(std::move(entries));
}

JointDistribution JointDistribution::FromProduct(const Game& game,
                                                 const ProductDistribution& x,
                                                 std::uint64_t max_support) {
  x.CheckFits(game);
  const int n = game.NumPlayers();
  std::vector<std::vector<int>> supports(n);
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    supports[i] = x.Support(i);
    size *= supports[i].size();
    if (size > max_support) {
      throw CapabilityError(fmt::format(
          "product support exceeds {} profiles", max_support));
    }
  }
  std::vector<JointEntry> entries;
  entries.reserve(size);
  std::vector<std::size_t> position(n, 0);
  for (;;) {
    double weight = 1.0;
    std::uint64_t index = 0;
    for (int i = 0; i < n; ++i) {
      const int a = supports[i][position[i]];
      weight *= x.Prob(i, a);
      index += static_cast<std::uint64_t>(a) * game.Stride(i);
    }
    entries.push_back({ProfileIndex{index}, weight});
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++position[i] < supports[i].size()) break;
      position[i] = 0;
    }
    if (i < 0) break;
  }
  return JointDistribution(std::move(entries));
}

double JointDistribution::Prob(ProfileIndex index) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const JointEntry& e, ProfileIndex i) { return e.index < i; });
  if (it == entries_.end() || it->index != index) return 0.0;
  return it->probability;
}

std::vector<std::vector<double>> JointDistribution::Marginals(
    const Game& game) const {
  CheckFits(game);
  std::vector<std::vector<double>> marginals;
  for (int m : game.ActionCounts()) marginals.emplace_back(m, 0.0);
  for (const JointEntry& e : entries_) {
    for (int i = 0; i < game.NumPlayers(); ++i) {
      marginals[i][game.ActionOf(e.index, i)] += e.probability;
    }
  }
  return marginals;
}

void JointDistribution::CheckFits(const Game& game) const {
  if (!entries_.empty() && entries_.back().index.value >= game.NumProfiles()) {
    throw ValidationError(fmt::format(
        "joint distribution has profile index {} but the game has {} profiles",
        entries_.back().index.value, game.NumProfiles()));
  }
}

KUniformJoint::KUniformJoint(std::int64_t k, std::vector<Entry> counts)
    : k_(k), counts_(std::move(counts)) {
  if (k_ < 1) throw ValidationError("k-uniform distribution needs k >= 1");
  std::sort(counts_.begin(), counts_.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::int64_t total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i].count < 1) {
      throw ValidationError("k-uniform counts must be positive");
    }
    if (i > 0 && counts_[i].index == counts_[i - 1].index) {
      throw ValidationError("k-uniform counts repeat a profile");
    }
    total += counts_[i].count;
  }
  if (total != k_) {
    throw ValidationError(
        fmt::format("k-uniform counts sum to {}, expected k = {}", total, k_));
  }
}

JointDistribution KUniformJoint::ToJoint() const {
  std::vector<JointEntry> entries;
  entries.reserve(counts_.size());
  const double k = static_cast<double>(k_);
  for (const Entry& e : counts_) {
    entries.push_back({e.index, static_cast<double>(e.count) / k});
  }
  return JointDistribution(std::move(entries));
}

std::vector<std::vector<std::int64_t>> KUniformJoint::MarginalCounts(
    const Game& game) const {
  std::vector<std::vector<std::int64_t>> counts;
  for (int m : game.ActionCounts()) counts.emplace_back(m, 0);
  for (const Entry& e : counts_) {
    for (int i = 0; i < game.NumPlayers(); ++i) {
      counts[i][game.ActionOf(e.index, i)] += e.count;
    }
  }
  return counts;
}

SampleBatch::SampleBatch(int num_players, std::vector<int> actions,
                         SeedRecord seed)
    : num_players_(num_players), actions_(std::move(actions)), seed_(seed) {
  if (num_players_ < 1) throw ValidationError("a sample needs at least one player");
  if (actions_.empty() || actions_.size() % num_players_ != 0) {
    throw ValidationError(fmt::format(
        "sample batch has {} actions, not a positive multiple of {} players",
        actions_.size(), num_players_));
  }
}

void SampleBatch::CheckFits(const Game& game) const {
  if (num_players_ != game.NumPlayers()) {
    throw ValidationError(fmt::format("samples have {} players, game has {}",
                                      num_players_, game.NumPlayers()));
  }
  for (std::int64_t t = 0; t < k(); ++t) {
    const auto profile = Profile(t);
    for (int i = 0; i < num_players_; ++i) {
      if (profile[i] < 0 || profile[i] >= game.NumActions(i)) {
        throw ValidationError(fmt::format(
            "sample {} has action {} for player {} (out of range [0,{}))", t,
            profile[i], i, game.NumActions(i)));
      }
    }
  }
}

InverseCdfSampler::InverseCdfSampler(std::span<const double> weights) {
  cumulative_.reserve(weights.size());
  double running = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    running += weights[i];
    cumulative_.push_back(running);
    if (weights[i] > 0.0) last_positive_ = i;
  }
  if (!(running > 0.0)) throw ValidationError("sampler weights sum to zero");
}

std::size_t InverseCdfSampler::Draw(Rng& rng) const {
  const double u = rng.Uniform() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto index = static_cast<std::size_t>(it - cumulative_.begin());
  return std::min(index, last_positive_);
}

SampleBatch DrawSamples(const Game& game, const ProductDistribution& x,
                        std::int64_t k, SeedRecord seed) {
  if (k < 1) throw ArgumentError(fmt::format("need k >= 1 samples, got {}", k));
  x.CheckFits(game);
  const int n = game.NumPlayers();
  std::vector<InverseCdfSampler> samplers;
  for (int i = 0; i < n; ++i) samplers.emplace_back(x.Strategy(i));
  Rng rng(seed);
  std::vector<int> actions(static_cast<std::size_t>(k) * n);
  for (std::size_t slot = 0; slot < actions.size(); ++slot) {
    actions[slot] = static_cast<int>(samplers[slot % n].Draw(rng));
  }
  return SampleBatch(n, std::move(actions), seed);
}

SampleBatch DrawSamples(const Game& game, const JointDistribution& x,
                        std::int64_t k, SeedRecord seed) {
  if (k < 1) throw ArgumentError(fmt::format("need k >= 1 samples, got {}", k));
  x.CheckFits(game);
  std::vector<double> weights;
  weights.reserve(x.SupportSize());
  for (const JointEntry& e : x.Entries()) weights.push_back(e.probability);
  const InverseCdfSampler sampler(weights);
  const auto entries = x.Entries();
  const int n = game.NumPlayers();
  Rng rng(seed);
  std::vector<int> actions(static_cast<std::size_t>(k) * n);
  for (std::int64_t t = 0; t < k; ++t) {
    const ProfileIndex index = entries[sampler.Draw(rng)].index;
    for (int i = 0; i < n; ++i) actions[t * n + i] = game.ActionOf(index, i);
  }
  return SampleBatch(n, std::move(actions), seed);
}

std::vector<std::vector<std::int64_t>> PlayerActionCounts(
    const SampleBatch& batch, const Game& game) {
  batch.CheckFits(game);
  std::vector<std::vector<std::int64_t>> counts;
  for (int m : game.ActionCounts()) counts.emplace_back(m, 0);
  for (std::int64_t t = 0; t < batch.k(); ++t) {
    const auto profile = batch.Profile(t);
    for (int i = 0; i < game.NumPlayers(); ++i) ++counts[i][profile[i]];
  }
  return counts;
}

ProductDistribution ProductEmpirical(const SampleBatch& batch,
                                     const Game& game) {
  const auto counts = PlayerActionCounts(batch, game);
  const double k = static_cast<double>(batch.k());
  std::vector<std::vector<double>> strategies;
  for (const auto& row : counts) {
    std::vector<double> s(row.size());
    for (std::size_t a = 0; a < row.size(); ++a) {
      s[a] = static_cast<double>(row[a]) / k;
    }
    strategies.push_back(std::move(s));
  }
  return ProductDistribution(std::move(strategies));
}

KUniformJoint JointEmpirical(const SampleBatch& batch, const Game& game) {
  batch.CheckFits(game);
  std::vector<ProfileIndex> indices;
  indices.reserve(batch.k());
  for (std::int64_t t = 0; t < batch.k(); ++t) {
    std::uint64_t index = 0;
    const auto profile = batch.Profile(t);
    for (int i = 0; i < game.NumPlayers(); ++i) {
      index += static_cast<std::uint64_t>(profile[i]) * game.Stride(i);
    }
    indices.push_back(ProfileIndex{index});
  }
  std::sort(indices.begin(), indices.end());
  std::vector<KUniformJoint::Entry> counts;
  for (ProfileIndex index : indices) {
    if (!counts.empty() && counts.back().index == index) {
      ++counts.back().count;
    } else {
      counts.push_back({index, 1});
    }
  }
  return KUniformJoint(batch.k(), std::move(counts));
}

std::string WriteSampleCsv(const SampleBatch& batch) {
  std::string out = fmt::format("# seed={} stream={} k={}\n",
                                batch.seed().master_seed, batch.seed().stream,
                                batch.k());
  for (int i = 0; i < batch.NumPlayers(); ++i) {
    out += fmt::format("{}a_{}", i == 0 ? "" : ",", i + 1);
  }
  out += '\n';
  for (std::int64_t t = 0; t < batch.k(); ++t) {
    const auto profile = batch.Profile(t);
    for (int i = 0; i < batch.NumPlayers(); ++i) {
      out += fmt::format("{}{}", i == 0 ? "" : ",", profile[i]);
    }
    out += '\n';
  }
  return out;
}

SampleBatch ReadSampleCsv(std::string_view text) {
  SeedRecord seed;
  std::int64_t declared_k = -1;
  int num_players = 0;
  std::vector<int> actions;
  bool header_seen = false;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = Trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_number;
    if (line.empty()) continue;
    if (line.front() == '#') {
      // Sidecar: "# seed=.. stream=.. k=..", fields optional.
      std::istringstream fields{std::string(line.substr(1))};
      std::string field;
      while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const std::string_view key = std::string_view(field).substr(0, eq);
        const std::string_view value = std::string_view(field).substr(eq + 1);
        if (key == "seed") seed.master_seed = ParseInteger<std::uint64_t>(value, "seed");
        if (key == "stream") seed.stream = ParseInteger<std::uint64_t>(value, "stream");
        if (key == "k") declared_k = ParseInteger<std::int64_t>(value, "k");
      }
      continue;
    }
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!header_seen) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (Trim(cells[i]) != fmt::format("a_{}", i + 1)) {
          throw ParseError(fmt::format(
              "line {}: expected header a_1,...,a_n, got '{}'", line_number, line));
        }
      }
      num_players = static_cast<int>(cells.size());
      header_seen = true;
      continue;
    }
    if (static_cast<int>(cells.size()) != num_players) {
      throw ParseError(fmt::format("line {}: expected {} columns, got {}",
                                   line_number, num_players, cells.size()));
    }
    for (std::string_view cell : cells) {
      actions.push_back(ParseInteger<int>(cell, "action"));
    }
  }
  if (!header_seen) throw ParseError("sample file has no header row");
  if (actions.empty()) throw ParseError("sample file has no samples");
  SampleBatch batch(num_players, std::move(actions), seed);
  if (declared_k >= 0 && declared_k != batch.k()) {
    throw ParseError(fmt::format("sidecar declares k={} but {} rows were read",
                                 declared_k, batch.k()));
  }
  return batch;
}

SampleBatch ReadSampleFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open sample file '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ReadSampleCsv(buffer.str());
}

}  // namespace eqsamp
