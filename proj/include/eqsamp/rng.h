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

#ifndef EQSAMP_RNG_H_
#define EQSAMP_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace eqsamp {

// Where a random stream came from: the user's master seed plus a derived
// stream id. Two batches with equal records are identical.
struct SeedRecord {
  std::uint64_t master_seed = 0;
  std::uint64_t stream = 0;
  friend bool operator==(const SeedRecord&, const SeedRecord&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds a sequence of keys (experiment tag, k, trial index, ...) into one
// stream id. Streams for distinct key tuples are independent for all
// practical purposes, so trials can run in any order.
inline std::uint64_t StreamId(std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = 0x6a09e667f3bcc908ULL;
  for (std::uint64_t key : keys) h = SplitMix64(h ^ SplitMix64(key));
  return h;
}

// FNV-1a, used to turn experiment names into stream keys.
inline std::uint64_t NameTag(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// mt19937_64 seeded from a SeedRecord. Uniform doubles use the top 53 bits
// directly so draws do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(SeedRecord record)
      : record_(record),
        engine_(SplitMix64(record.master_seed) ^ SplitMix64(~record.stream)) {}

  std::uint64_t Next() { return engine_(); }

  // In [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // In [0, n); Lemire's method with rejection.
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const unsigned __int128 m =
          static_cast<unsigned __int128>(engine_()) * n;
      if (static_cast<std::uint64_t>(m) >= threshold) {
        return static_cast<std::uint64_t>(m >> 64);
      }
    }
  }

  const SeedRecord& record() const { return record_; }

 private:
  SeedRecord record_;
  std::mt19937_64 engine_;
};

}  // namespace eqsamp

#endif  // EQSAMP_RNG_H_
