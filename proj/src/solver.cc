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

#include "eqsamp/solver.h"

#include <fmt/format.h>

#include <atomic>
#include <exception>
#include <limits>
#include <mutex>

#include "eqsamp/errors.h"
#include "eqsamp/regret.h"

namespace eqsamp {

std::optional<std::uint64_t> CompositionCount(int m, int k) {
  if (m < 1 || k < 0) return std::nullopt;
  unsigned __int128 c = 1;
  for (int i = 1; i < m; ++i) {
    c = c * static_cast<unsigned>(k + i) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

CompositionEnumerator::CompositionEnumerator(int m, int k) : k_(k) {
  if (m < 1 || k < 1) {
    throw ArgumentError(fmt::format("compositions need m >= 1 and k >= 1, got m={} k={}",
                                    m, k));
  }
  current_.assign(m, 0);
  current_.back() = k;
}

void CompositionEnumerator::Advance() {
  if (done_) return;
  const int m = static_cast<int>(current_.size());
  if (current_[0] == k_) {
    done_ = true;
    return;
  }
  // The lexicographic successor moves one unit to the left of the rightmost
  // nonzero entry that has one, and parks the remaining tail mass at the end.
  int j = m - 1;
  while (current_[j] == 0) --j;
  const int i = current_[m - 1] > 0 ? m - 2 : j - 1;
  int tail = 0;
  for (int t = i + 1; t < m; ++t) {
    tail += current_[t];
    current_[t] = 0;
  }
  ++current_[i];
  current_[m - 1] = tail - 1;
}

std::vector<Composition> EnumerateKUniform(int m, int k, std::uint64_t cap) {
  const auto count = CompositionCount(m, k);
  if (!count) {
    throw CapabilityError(fmt::format(
        "C({}+{}-1, {}-1) compositions do not fit in 64 bits", k, m, m));
  }
  if (*count > cap) {
    throw CapabilityError(fmt::format(
        "{} compositions of k={} into m={} parts exceed the cap of {}", *count,
        k, m, cap));
  }
  std::vector<Composition> out;
  out.reserve(*count);
  for (CompositionEnumerator e(m, k); !e.Done(); e.Advance()) {
    out.push_back(e.Current());
  }
  return out;
}

ProductDistribution KUniformStrategyProfile::ToProduct() const {
  std::vector<std::vector<double>> strategies;
  for (const Composition& c : counts) {
    std::vector<double> s(c.size());
    for (std::size_t a = 0; a < c.size(); ++a) {
      s[a] = static_cast<double>(c[a]) / k;
    }
    strategies.push_back(std::move(s));
  }
  return ProductDistribution(std::move(strategies));
}

nlohmann::json SolverResult::ToJson() const {
  nlohmann::json out;
  out["candidates"] = candidates;
  if (!profile) {
    out["status"] = "NOT_FOUND";
    return out;
  }
  out["status"] = "FOUND";
  out["k"] = profile->k;
  out["ordinal"] = ordinal;
  out["max_gain"] = max_gain;
  out["counts"] = profile->counts;
  nlohmann::json strategies = nlohmann::json::array();
  const ProductDistribution x = profile->ToProduct();
  for (int i = 0; i < x.NumPlayers(); ++i) {
    const auto s = x.Strategy(i);
    strategies.push_back(std::vector<double>(s.begin(), s.end()));
  }
  out["strategies"] = std::move(strategies);
  return out;
}

namespace {

struct CandidateSpace {
  int k = 0;
  std::vector<std::vector<Composition>> per_player;
  std::uint64_t total = 1;

  KUniformStrategyProfile Decode(std::uint64_t ordinal) const {
    KUniformStrategyProfile p;
    p.k = k;
    p.counts.resize(per_player.size());
    for (int i = static_cast<int>(per_player.size()) - 1; i >= 0; --i) {
      const std::uint64_t size = per_player[i].size();
      p.counts[i] = per_player[i][ordinal % size];
      ordinal /= size;
    }
    return p;
  }
};

bool Passes(const Game& game, const CandidateSpace& space,
            std::uint64_t ordinal, double eps) {
  return IsEpsNash(game, space.Decode(ordinal).ToProduct(), eps).passed;
}

std::optional<std::uint64_t> ScanSerial(const Game& game,
                                        const CandidateSpace& space,
                                        double eps) {
  for (std::uint64_t c = 0; c < space.total; ++c) {
    if (Passes(game, space, c, eps)) return c;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> ScanParallel(const Game& game,
                                          const CandidateSpace& space,
                                          double eps) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto total = static_cast<std::int64_t>(space.total);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t c = 0; c < total; ++c) {
    const auto ordinal = static_cast<std::uint64_t>(c);
    if (ordinal >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (!Passes(game, space, ordinal, eps)) continue;
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      continue;
    }
    std::uint64_t seen = best.load();
    while (ordinal < seen && !best.compare_exchange_weak(seen, ordinal)) {
    }
  }
  if (failure) std::rethrow_exception(failure);
  const std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

}  // namespace

SolverResult ExhaustiveKUniformNash(const Game& game, double eps, int k,
                                    const SolverOptions& options) {
  if (!(eps >= 0.0)) throw ArgumentError(fmt::format("eps must be >= 0, got {}", eps));
  if (k < 1) throw ArgumentError(fmt::format("k must be >= 1, got {}", k));
  if (options.max_support && *options.max_support < 1) {
    throw ArgumentError("max_support must be >= 1");
  }

  CandidateSpace space;
  space.k = k;
  for (int i = 0; i < game.NumPlayers(); ++i) {
    std::vector<Composition> all =
        EnumerateKUniform(game.NumActions(i), k, options.candidate_cap);
    if (options.max_support) {
      std::erase_if(all, [&](const Composition& c) {
        int used = 0;
        for (int v : c) used += v > 0;
        return used > *options.max_support;
      });
    }
    const std::uint64_t size = all.size();
    if (space.total > options.candidate_cap / size) {
      throw CapabilityError(fmt::format(
          "k-uniform candidate profiles exceed the cap of {}", options.candidate_cap));
    }
    space.total *= size;
    space.per_player.push_back(std::move(all));
  }

  SolverResult result;
  result.candidates = space.total;
  const auto found = options.execution == Execution::kSerial
                         ? ScanSerial(game, space, eps)
                         : ScanParallel(game, space, eps);
  if (!found) return result;
  result.ordinal = *found;
  result.profile = space.Decode(*found);
  const Verification check = IsEpsNash(game, result.profile->ToProduct(), eps);
  if (!check.passed) {
    throw Error("internal: returned k-uniform profile failed re-verification");
  }
  result.max_gain = check.report.MaxNashGain();
  return result;
}

}  // namespace eqsamp
