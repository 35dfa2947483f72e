//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_PARALLEL_H_
#define PESTGRAPH_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pestgraph {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work items are handed
// out dynamically, so fn must write only to slots owned by i; under that rule
// the result does not depend on scheduling. threads <= 1 runs inline.
// The first exception thrown by any worker is rethrown on the caller.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn &&fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }

  const auto workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::atomic<std::size_t> next { 0 };
  std::exception_ptr error;
  std::mutex error_mutex;

  auto body = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = n;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w)
    pool.emplace_back(body);
  body();
  for (auto &t: pool)
    t.join();

  if (error)
    std::rethrow_exception(error);
}

}  // namespace pestgraph

#endif  // PESTGRAPH_PARALLEL_H_
