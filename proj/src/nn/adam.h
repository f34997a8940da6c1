// src/nn/adam.h

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

#ifndef SEANET_NN_ADAM_H_
#define SEANET_NN_ADAM_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nn/tensor.h"

namespace seanet::nn {

// Ordered named parameter registry shared by the optimizer and the
// checkpoint writer. Registration order is the serialization order.
struct ParamSet {
  std::vector<std::pair<std::string, Tensor>> items;

  Tensor& add(const std::string& name, Tensor t) {
    items.emplace_back(name, std::move(t));
    return items.back().second;
  }
  int64_t total_elements() const {
    int64_t n = 0;
    for (const auto& [name, t] : items) n += t.numel();
    return n;
  }
};

struct AdamConfig {
  float lr = 1e-4f;
  float beta1 = 0.5f;
  float beta2 = 0.9f;
  float eps = 1e-8f;
};

class Adam {
 public:
  Adam(ParamSet* params, AdamConfig cfg);

  void zero_grad();
  void step();

  int64_t step_count() const { return t_; }

  // Moment buffers plus the step counter, for exact checkpoint resume.
  std::vector<std::pair<std::string, Tensor>> state_tensors() const;
  void load_state(const std::map<std::string, Tensor>& state);

 private:
  ParamSet* params_;
  AdamConfig cfg_;
  int64_t t_ = 0;
  std::vector<Tensor> m_;
  std::vector<Tensor> v_;
};

}  // namespace seanet::nn

#endif  // SEANET_NN_ADAM_H_
