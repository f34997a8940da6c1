// src/nn/tensor.cpp

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

#include "nn/tensor.h"

#include <algorithm>
#include <cmath>

#include "common/error.h"

namespace seanet::nn {

std::string Shape::str() const {
  return "(" + std::to_string(b) + ", " + std::to_string(c) + ", " +
         std::to_string(t) + ")";
}

Tensor Tensor::zeros(Shape s, bool needs_grad) {
  Tensor out;
  out.val_ = std::make_shared<Buffer>(s);
  if (needs_grad) out.grad_ = std::make_shared<Buffer>(s);
  return out;
}

Tensor Tensor::from_values(Shape s, std::vector<float> v, bool needs_grad) {
  SEANET_CHECK(static_cast<int64_t>(v.size()) == s.numel(),
               ErrorCategory::kShape, "tensor value count does not match shape");
  Tensor out = zeros(s, needs_grad);
  std::copy(v.begin(), v.end(), out.data());
  return out;
}

Tensor Tensor::scalar_value(float v) {
  Tensor out = zeros({1, 1, 1}, false);
  out.data()[0] = v;
  return out;
}

void Tensor::zero_grad() {
  if (grad_) std::fill(grad_->data.begin(), grad_->data.end(), 0.0f);
}

Tensor Tensor::detached() const {
  Tensor out;
  out.val_ = val_;
  return out;
}

float Tensor::item() const {
  SEANET_CHECK(numel() == 1, ErrorCategory::kShape,
               "item() requires a single-element tensor");
  return data()[0];
}

void Tape::backward(Tensor& root) {
  SEANET_CHECK(root.numel() == 1, ErrorCategory::kShape,
               "backward() root must be scalar");
  if (!root.needs_grad()) return;
  root.grad()[0] = 1.0f;
  run_reverse();
}

void Tape::run_reverse() {
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) (*it)();
}

float max_abs(const Tensor& t) {
  float m = 0.0f;
  const float* p = t.data();
  for (int64_t i = 0, n = t.numel(); i < n; ++i)
    m = std::max(m, std::fabs(p[i]));
  return m;
}

bool all_finite(const Tensor& t) {
  const float* p = t.data();
  for (int64_t i = 0, n = t.numel(); i < n; ++i)
    if (!std::isfinite(p[i])) return false;
  return true;
}

}  // namespace seanet::nn
