// src/nn/adam.cpp

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

#include "nn/adam.h"

#include <cmath>
#include <map>

#include "common/error.h"

namespace seanet::nn {

Adam::Adam(ParamSet* params, AdamConfig cfg) : params_(params), cfg_(cfg) {
  for (auto& [name, p] : params_->items) {
    SEANET_CHECK(p.needs_grad(), ErrorCategory::kInternal,
                 "parameter without gradient slot: " + name);
    m_.push_back(Tensor::zeros(p.shape(), false));
    v_.push_back(Tensor::zeros(p.shape(), false));
  }
}

void Adam::zero_grad() {
  for (auto& [name, p] : params_->items) p.zero_grad();
}

void Adam::step() {
  ++t_;
  const float inv_bc1 =
      static_cast<float>(1.0 / (1.0 - std::pow(double(cfg_.beta1), double(t_))));
  const float inv_bc2 =
      static_cast<float>(1.0 / (1.0 - std::pow(double(cfg_.beta2), double(t_))));
  for (size_t i = 0; i < params_->items.size(); ++i) {
    Tensor& p = params_->items[i].second;
    const float* g = p.grad();
    float* pd = p.data();
    float* m = m_[i].data();
    float* v = v_[i].data();
    const int64_t n = p.numel();
    for (int64_t j = 0; j < n; ++j) {
      m[j] = cfg_.beta1 * m[j] + (1.0f - cfg_.beta1) * g[j];
      v[j] = cfg_.beta2 * v[j] + (1.0f - cfg_.beta2) * g[j] * g[j];
      pd[j] -= cfg_.lr * (m[j] * inv_bc1) /
               (std::sqrt(v[j] * inv_bc2) + cfg_.eps);
    }
  }
}

std::vector<std::pair<std::string, Tensor>> Adam::state_tensors() const {
  std::vector<std::pair<std::string, Tensor>> out;
  Tensor tstep = Tensor::zeros({1, 1, 1}, false);
  tstep.data()[0] = static_cast<float>(t_);
  out.emplace_back("adam.t", tstep);
  for (size_t i = 0; i < params_->items.size(); ++i) {
    out.emplace_back("adam.m." + params_->items[i].first, m_[i]);
    out.emplace_back("adam.v." + params_->items[i].first, v_[i]);
  }
  return out;
}

void Adam::load_state(const std::map<std::string, Tensor>& state) {
  auto it = state.find("adam.t");
  SEANET_CHECK(it != state.end(), ErrorCategory::kIo,
               "optimizer state missing step counter");
  t_ = static_cast<int64_t>(it->second.data()[0]);
  for (size_t i = 0; i < params_->items.size(); ++i) {
    const std::string& name = params_->items[i].first;
    auto mit = state.find("adam.m." + name);
    auto vit = state.find("adam.v." + name);
    SEANET_CHECK(mit != state.end() && vit != state.end(), ErrorCategory::kIo,
                 "optimizer state missing moments for: " + name);
    SEANET_CHECK(mit->second.shape() == m_[i].shape() &&
                     vit->second.shape() == v_[i].shape(),
                 ErrorCategory::kIo, "optimizer state shape mismatch: " + name);
    std::copy(mit->second.data(), mit->second.data() + m_[i].numel(),
              m_[i].data());
    std::copy(vit->second.data(), vit->second.data() + v_[i].numel(),
              v_[i].data());
  }
}

}  // namespace seanet::nn
