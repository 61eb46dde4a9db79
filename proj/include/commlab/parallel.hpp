// Copyright 2026 The commlab Authors
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

#ifndef COMMLAB_PARALLEL_HPP_
#define COMMLAB_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace commlab {

// Worker cap: COMMLAB_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Runs task(i) for i in [0, n) on up to `workers` threads and returns the
// results indexed by i, so the output never depends on scheduling. The first
// exception thrown by any task is rethrown after all workers join.
template <class Result, class Task>
std::vector<Result> parallel_map(size_t n, unsigned workers, Task&& task) {
  std::vector<Result> results(n);
  const unsigned threads =
      static_cast<unsigned>(std::min<size_t>(std::max(workers, 1U), n));
  if (threads <= 1) {
    for (size_t i = 0; i < n; ++i) results[i] = task(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace commlab

#endif  // COMMLAB_PARALLEL_HPP_
