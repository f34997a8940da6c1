// src/nn/tensor.h

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

#ifndef SEANET_NN_TENSOR_H_
#define SEANET_NN_TENSOR_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace seanet::nn {

// All tensors are (batch, channels, time). Scalars use {1, 1, 1}.
struct Shape {
  int b = 1;
  int c = 1;
  int t = 1;

  int64_t numel() const {
    return static_cast<int64_t>(b) * static_cast<int64_t>(c) *
           static_cast<int64_t>(t);
  }
  bool operator==(const Shape&) const = default;
  std::string str() const;
};

struct Buffer {
  Shape shape;
  std::vector<float> data;

  explicit Buffer(Shape s)
      : shape(s), data(static_cast<size_t>(s.numel()), 0.0f) {}
};

// Value plus optional gradient slot. Copies share storage; the tape's
// backward closures capture Tensors by value and accumulate into the
// shared gradient buffers.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape s, bool needs_grad = false);
  static Tensor from_values(Shape s, std::vector<float> v,
                            bool needs_grad = false);
  static Tensor scalar_value(float v);

  bool defined() const { return val_ != nullptr; }
  const Shape& shape() const { return val_->shape; }
  int64_t numel() const { return val_->shape.numel(); }

  float* data() { return val_->data.data(); }
  const float* data() const { return val_->data.data(); }

  bool needs_grad() const { return grad_ != nullptr; }
  float* grad() { return grad_->data.data(); }
  const float* grad() const { return grad_->data.data(); }
  void zero_grad();

  // Shares the value buffer, drops the gradient path.
  Tensor detached() const;

  // Value of a single-element tensor.
  float item() const;

  std::shared_ptr<Buffer> val_buffer() const { return val_; }
  std::shared_ptr<Buffer> grad_buffer() const { return grad_; }

 private:
  std::shared_ptr<Buffer> val_;
  std::shared_ptr<Buffer> grad_;
};

// Records backward closures in execution order; backward() replays them in
// reverse. Plain single-stream reverse-mode autodiff over a dynamic graph.
class Tape {
 public:
  void record(std::function<void()> fn) { ops_.push_back(std::move(fn)); }

  // Seeds d(root)/d(root) = 1 and propagates. `root` must be a scalar.
  void backward(Tensor& root);

  // Replays without seeding; used when gradients were already deposited
  // into this tape's outputs by a later tape (generator update).
  void run_reverse();

  size_t size() const { return ops_.size(); }
  void clear() { ops_.clear(); }

 private:
  std::vector<std::function<void()>> ops_;
};

float max_abs(const Tensor& t);
bool all_finite(const Tensor& t);

}  // namespace seanet::nn

#endif  // SEANET_NN_TENSOR_H_
