// Copyright 2026 The lgt Authors
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

#include "lgt/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace lgt {
namespace {

std::atomic<unsigned> g_workers{0};

unsigned from_env() {
  if (const char* v = std::getenv("LGT_NUM_THREADS")) {
    try {
      const int n = std::stoi(v);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

unsigned worker_count() {
  unsigned n = g_workers.load();
  if (n == 0) {
    n = from_env();
    g_workers.store(n);
  }
  return n;
}

void set_worker_count(unsigned n) { g_workers.store(std::max(1U, n)); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t grain) {
  const unsigned workers = worker_count();
  if (workers <= 1 || n < std::max<std::size_t>(grain, 2)) {
    if (n > 0) fn(0, n);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(workers, (n + grain - 1) / grain);
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t b = c * step, e = std::min(n, b + step);
    if (b >= e) break;
    threads.emplace_back(fn, b, e);
  }
  for (auto& t : threads) t.join();
}

}  // namespace lgt
