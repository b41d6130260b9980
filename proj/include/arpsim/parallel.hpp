// Copyright 2026 arpsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARPSIM_PARALLEL_HPP
#define ARPSIM_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace arpsim {

/// Runs fn(0..n-1) on up to `threads` workers. Work items must be
/// independent; results are written to per-item slots by the caller, so the
/// outcome does not depend on scheduling order. The first exception thrown
/// by any item is rethrown on the calling thread.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads < 1) threads = 1;
  if (n <= 0) return;
  if (threads == 1 || n == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next(0);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min(threads, n);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// Hardware thread count fallback.
inline int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace arpsim

#endif  // ARPSIM_PARALLEL_HPP
