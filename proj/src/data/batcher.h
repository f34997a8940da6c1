// src/data/batcher.h

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

#ifndef SEANET_DATA_BATCHER_H_
#define SEANET_DATA_BATCHER_H_

#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include "data/pipeline.h"
#include "nn/tensor.h"

namespace seanet {

enum class BatchMode {
  kDenoise,     // audio_in = x_m, accel_in = x_a, target = y_m
  kAccelSynth,  // audio_in = y_m (clean), target = x_a
};

struct Batch {
  nn::Tensor audio_in;  // (B, 1, T)
  nn::Tensor accel_in;  // (B, A, T); undefined without conditioning
  nn::Tensor target;    // (B, 1, T)
  std::vector<int64_t> example_indices;
};

// Deterministic epoch-shuffled batch stream. Batch b is a pure function of
// (factory, seed, b): epochs are Fisher-Yates permutations seeded per epoch,
// examples draw their own rng from (seed, epoch, position). Workers prefetch
// ahead but batches are always emitted in index order, so the trainer sees
// the identical stream no matter how many workers run.
class BatchIterator {
 public:
  BatchIterator(std::shared_ptr<const ExampleFactory> factory, BatchMode mode,
                int batch_size, uint64_t seed, int64_t start_batch = 0,
                int num_workers = 1);
  ~BatchIterator();

  BatchIterator(const BatchIterator&) = delete;
  BatchIterator& operator=(const BatchIterator&) = delete;

  Batch next();

  // Pure construction of a batch by index; the prefetch path calls this.
  Batch build_batch(int64_t batch_index) const;

 private:
  void worker_loop();

  std::shared_ptr<const ExampleFactory> factory_;
  BatchMode mode_;
  int batch_size_;
  uint64_t seed_;

  std::mutex mu_;
  std::condition_variable cv_ready_;
  std::condition_variable cv_space_;
  std::map<int64_t, Batch> ready_;
  int64_t next_claim_ = 0;
  int64_t next_emit_ = 0;
  int depth_ = 0;
  bool stop_ = false;
  std::vector<std::thread> workers_;
};

}  // namespace seanet

#endif  // SEANET_DATA_BATCHER_H_
