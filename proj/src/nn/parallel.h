// src/nn/parallel.h

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

#ifndef SEANET_NN_PARALLEL_H_
#define SEANET_NN_PARALLEL_H_

#include <functional>

namespace seanet::nn {

// Worker width for op-level parallelism; hardware concurrency capped at 8,
// overridable with SEANET_THREADS. BLAS itself runs single-threaded (skinny
// conv GEMMs lose more to handoff than they gain), so this is the only
// threading layer in the math path.
int pool_width();

// Runs fn(0..num_tasks-1) across up to pool_width() threads with a static
// contiguous partition. Tasks must write disjoint outputs; reductions are
// the caller's job (accumulate per task, then combine in task order, which
// keeps results independent of the thread count).
void parallel_tasks(int num_tasks, const std::function<void(int)>& fn);

// Splits [0, n) into pool_width() contiguous chunks for elementwise loops.
void parallel_range(int64_t n, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace seanet::nn

#endif  // SEANET_NN_PARALLEL_H_
