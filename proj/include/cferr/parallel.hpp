// Copyright 2026 The cferrsum Authors
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

#ifndef CFERR_PARALLEL_HPP
#define CFERR_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace cferr {

/// Worker count: CF_ERRSUM_THREADS if set (must be a positive integer,
/// otherwise std::invalid_argument), else the hardware concurrency.
unsigned worker_count();

/// Evaluates fn(k) for k = lo..hi on up to worker_count() threads and returns
/// the results in index order. The first exception thrown by any call is
/// rethrown after all workers have stopped.
template <class Fn>
auto parallel_map(long lo, long hi, Fn fn) -> std::vector<std::invoke_result_t<Fn&, long>> {
  using Result = std::invoke_result_t<Fn&, long>;
  if (hi < lo) return {};
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Result> out(count);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(lo + static_cast<long>(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace cferr

#endif  // CFERR_PARALLEL_HPP
