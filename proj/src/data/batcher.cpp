// src/data/batcher.cpp

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

#include "data/batcher.h"

#include <algorithm>

#include "common/error.h"
#include "nn/rng.h"

namespace seanet {

namespace {

// Fisher-Yates permutation of [0, n) from a per-epoch seed.
std::vector<int64_t> epoch_permutation(int64_t n, uint64_t seed) {
  std::vector<int64_t> perm(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  Rng rng(seed);
  for (int64_t i = n - 1; i > 0; --i) {
    const int64_t j = rng.next_below(i + 1);
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
  }
  return perm;
}

void copy_channel(nn::Tensor& dst, int b, int c, const std::vector<float>& src) {
  const int T = dst.shape().t;
  SEANET_CHECK(static_cast<int64_t>(src.size()) == T, ErrorCategory::kShape,
               "batch: example length mismatch");
  std::copy(src.begin(), src.end(),
            dst.data() + (static_cast<int64_t>(b) * dst.shape().c + c) * T);
}

}  // namespace

BatchIterator::BatchIterator(std::shared_ptr<const ExampleFactory> factory,
                             BatchMode mode, int batch_size, uint64_t seed,
                             int64_t start_batch, int num_workers)
    : factory_(std::move(factory)),
      mode_(mode),
      batch_size_(batch_size),
      seed_(seed) {
  SEANET_CHECK(batch_size_ >= 1, ErrorCategory::kInvalidArgument,
               "batch_size must be >= 1");
  SEANET_CHECK(factory_->size() > 0, ErrorCategory::kConfig,
               "cannot iterate an empty manifest");
  next_claim_ = next_emit_ = start_batch;
  if (num_workers > 0) {
    depth_ = 2 * num_workers;
    workers_.reserve(static_cast<size_t>(num_workers));
    for (int i = 0; i < num_workers; ++i)
      workers_.emplace_back([this] { worker_loop(); });
  }
}

BatchIterator::~BatchIterator() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  cv_space_.notify_all();
  cv_ready_.notify_all();
  for (auto& w : workers_) w.join();
}

Batch BatchIterator::build_batch(int64_t batch_index) const {
  const int64_t n = factory_->size();
  std::vector<TrainingExample> examples;
  examples.reserve(static_cast<size_t>(batch_size_));
  std::vector<int64_t> indices;
  int64_t cached_epoch = -1;
  std::vector<int64_t> perm;
  for (int j = 0; j < batch_size_; ++j) {
    const int64_t pos_global = batch_index * batch_size_ + j;
    const int64_t epoch = pos_global / n;
    const int64_t pos = pos_global % n;
    if (epoch != cached_epoch) {
      perm = epoch_permutation(
          n, mix_seed(seed_, static_cast<uint64_t>(epoch) << 1, 0));
      cached_epoch = epoch;
    }
    const int64_t idx = perm[static_cast<size_t>(pos)];
    const uint64_t ex_seed =
        mix_seed(seed_, (static_cast<uint64_t>(epoch) << 1) | 1,
                 static_cast<uint64_t>(pos));
    examples.push_back(factory_->make(idx, ex_seed));
    indices.push_back(idx);
  }

  const int T = static_cast<int>(examples[0].y_m.length());
  const int accel_ch = examples[0].x_a.num_channels();

  Batch batch;
  batch.example_indices = std::move(indices);
  batch.audio_in = nn::Tensor::zeros({batch_size_, 1, T}, false);
  batch.target = nn::Tensor::zeros({batch_size_, 1, T}, false);
  const bool want_accel = mode_ == BatchMode::kDenoise && accel_ch > 0;
  if (want_accel)
    batch.accel_in = nn::Tensor::zeros({batch_size_, accel_ch, T}, false);

  for (int b = 0; b < batch_size_; ++b) {
    const TrainingExample& ex = examples[static_cast<size_t>(b)];
    if (mode_ == BatchMode::kDenoise) {
      copy_channel(batch.audio_in, b, 0, ex.x_m.mono());
      copy_channel(batch.target, b, 0, ex.y_m.mono());
      if (want_accel)
        for (int c = 0; c < accel_ch; ++c)
          copy_channel(batch.accel_in, b, c, ex.x_a.ch(c));
    } else {
      SEANET_CHECK(ex.x_a.num_channels() == 1, ErrorCategory::kShape,
                   "accel-synthesis expects one accelerometer channel");
      copy_channel(batch.audio_in, b, 0, ex.y_m.mono());
      copy_channel(batch.target, b, 0, ex.x_a.ch(0));
    }
  }
  return batch;
}

void BatchIterator::worker_loop() {
  for (;;) {
    int64_t index;
    {
      std::unique_lock<std::mutex> lock(mu_);
      cv_space_.wait(lock, [this] {
        return stop_ || next_claim_ - next_emit_ < depth_;
      });
      if (stop_) return;
      index = next_claim_++;
    }
    Batch b = build_batch(index);
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (stop_) return;
      ready_.emplace(index, std::move(b));
    }
    cv_ready_.notify_all();
  }
}

Batch BatchIterator::next() {
  if (workers_.empty()) {
    Batch b = build_batch(next_emit_);
    ++next_emit_;
    return b;
  }
  std::unique_lock<std::mutex> lock(mu_);
  cv_ready_.wait(lock, [this] { return ready_.count(next_emit_) > 0; });
  auto it = ready_.find(next_emit_);
  Batch b = std::move(it->second);
  ready_.erase(it);
  ++next_emit_;
  cv_space_.notify_all();
  return b;
}

}  // namespace seanet
