// Copyright 2026 The symspace Authors.
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

#pragma once

// Trial-parallel execution with a worker-independent reduction order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace symspace::detail {

/// Trials are grouped into chunks of this size; the chunk layout depends only
/// on the trial count, never on the number of workers.
inline constexpr std::uint64_t kChunkSize = 1024;

inline std::uint64_t chunk_count(std::uint64_t trials) {
  return (trials + kChunkSize - 1) / kChunkSize;
}

/// Calls fn(chunk_index, begin, end) once for every chunk, spread over up to
/// `workers` threads. The first exception thrown by any chunk is rethrown.
template <class ChunkFn>
void for_each_chunk(std::uint64_t trials, unsigned workers, ChunkFn&& fn) {
  const std::uint64_t chunks = chunk_count(trials);
  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t begin = c * kChunkSize;
    fn(c, begin, std::min(trials, begin + kChunkSize));
  };
  if (workers <= 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        run_chunk(c);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  const auto n_threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

/// values[i] = fn(i) for every trial index i.
template <class TrialFn>
std::vector<double> collect_trials(std::uint64_t trials, unsigned workers, TrialFn&& fn) {
  std::vector<double> values(trials);
  for_each_chunk(trials, workers, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) values[i] = fn(i);
  });
  return values;
}

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace symspace::detail
