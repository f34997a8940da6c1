// src/nn/parallel.cpp

// Copyright 2026  SEANet C++ project

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "nn/parallel.h"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

extern "C" void openblas_set_num_threads(int);

namespace seanet::nn {

int pool_width() {
  static const int width = [] {
    openblas_set_num_threads(1);
    if (const char* env = std::getenv("SEANET_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return std::min(v, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
  }();
  return width;
}

void parallel_tasks(int num_tasks, const std::function<void(int)>& fn) {
  const int workers = std::min(pool_width(), num_tasks);
  if (workers <= 1 || num_tasks <= 1) {
    for (int t = 0; t < num_tasks; ++t) fn(t);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers - 1));
  auto run = [&](int worker) {
    const int lo = static_cast<int>(int64_t(num_tasks) * worker / workers);
    const int hi = static_cast<int>(int64_t(num_tasks) * (worker + 1) / workers);
    for (int t = lo; t < hi; ++t) fn(t);
  };
  for (int w = 1; w < workers; ++w) threads.emplace_back(run, w);
  run(0);
  for (auto& t : threads) t.join();
}

void parallel_range(int64_t n, const std::function<void(int64_t, int64_t)>& fn) {
  const int workers =
      static_cast<int>(std::min<int64_t>(pool_width(), (n + 16383) / 16384));
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers - 1));
  auto run = [&](int worker) {
    const int64_t lo = n * worker / workers;
    const int64_t hi = n * (worker + 1) / workers;
    if (hi > lo) fn(lo, hi);
  };
  for (int w = 1; w < workers; ++w) threads.emplace_back(run, w);
  run(0);
  for (auto& t : threads) t.join();
}

}  // namespace seanet::nn
