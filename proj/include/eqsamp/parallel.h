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

#ifndef EQSAMP_PARALLEL_H_
#define EQSAMP_PARALLEL_H_

// Trial loops. Every trial owns its RNG stream and returns an integer, so
// the reduction is exact and the result does not depend on scheduling. The
// serial loop is the reference the parallel one is tested against.

#include <cstdint>
#include <exception>
#include <mutex>

namespace eqsamp {

enum class Execution { kSerial, kParallel };

// Sum over t in [0, trials) of trial(t).
template <typename TrialFn>
std::int64_t SumTrialsSerial(std::int64_t trials, TrialFn&& trial) {
  std::int64_t total = 0;
  for (std::int64_t t = 0; t < trials; ++t) total += trial(t);
  return total;
}

template <typename TrialFn>
std::int64_t SumTrialsParallel(std::int64_t trials, TrialFn&& trial) {
  std::int64_t total = 0;
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
  for (std::int64_t t = 0; t < trials; ++t) {
    try {
      total += trial(t);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

template <typename TrialFn>
std::int64_t SumTrials(std::int64_t trials, TrialFn&& trial,
                       Execution execution) {
  if (execution == Execution::kSerial) return SumTrialsSerial(trials, trial);
  return SumTrialsParallel(trials, trial);
}

// General reduction: trial(t, acc) updates a thread-local Acc, and the
// partial results are combined with acc.Merge(other). Merge must be
// commutative and associative (sums, minima) for the result to be
// schedule-independent.
template <typename Acc, typename TrialFn>
Acc ReduceTrials(std::int64_t trials, TrialFn&& trial, Execution execution) {
  Acc total{};
  if (execution == Execution::kSerial) {
    for (std::int64_t t = 0; t < trials; ++t) trial(t, total);
    return total;
  }
  std::exception_ptr failure;
  std::mutex mutex;
#pragma omp parallel
  {
    Acc local{};
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < trials; ++t) {
      try {
        trial(t, local);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!failure) failure = std::current_exception();
      }
    }
    std::lock_guard<std::mutex> lock(mutex);
    total.Merge(local);
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

}  // namespace eqsamp

#endif  // EQSAMP_PARALLEL_H_
