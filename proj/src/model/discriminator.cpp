// src/model/discriminator.cpp

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

#include "model/discriminator.h"

#include <algorithm>

#include "common/error.h"
#include "json.hpp"

namespace seanet {

std::string DiscriminatorSpec::to_json() const {
  nlohmann::json j;
  j["num_scales"] = num_scales;
  j["base_channels"] = base_channels;
  j["max_channels"] = max_channels;
  j["groups"] = groups;
  j["downsample_factor"] = downsample_factor;
  j["channel_multiplier"] = channel_multiplier;
  j["num_grouped_stages"] = num_grouped_stages;
  j["leaky_slope"] = leaky_slope;
  return j.dump(2);
}

DiscriminatorSpec DiscriminatorSpec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  SEANET_CHECK(!j.is_discarded(), ErrorCategory::kConfig,
               "invalid discriminator spec JSON");
  DiscriminatorSpec s;
  s.num_scales = j.value("num_scales", 3);
  s.base_channels = j.value("base_channels", 16);
  s.max_channels = j.value("max_channels", 1024);
  s.groups = j.value("groups", 4);
  s.downsample_factor = j.value("downsample_factor", 4);
  s.channel_multiplier = j.value("channel_multiplier", 4);
  s.num_grouped_stages = j.value("num_grouped_stages", 4);
  s.leaky_slope = j.value("leaky_slope", 0.3f);
  return s;
}

MultiScaleDiscriminator::MultiScaleDiscriminator(const DiscriminatorSpec& spec,
                                                 uint64_t seed)
    : spec_(spec) {
  SEANET_CHECK(spec.num_scales >= 1 && spec.base_channels >= spec.groups,
               ErrorCategory::kConfig, "discriminator: bad spec");
  Rng rng(mix_seed(seed, 0x64697363 /* "disc" */));
  scales_.resize(spec.num_scales);
  for (int k = 0; k < spec.num_scales; ++k) {
    ScaleNet& net = scales_[k];
    const std::string prefix = "scale" + std::to_string(k);
    int ch = spec.base_channels;
    auto add_stage = [&](const std::string& name, int in_ch, int out_ch,
                         int kernel, int stride, int groups) {
      Stage st;
      st.conv.init(params_, prefix + "." + name, in_ch, out_ch, kernel, stride,
                   groups, rng);
      st.norm.init(params_, prefix + "." + name + ".ln", out_ch);
      net.stages.push_back(std::move(st));
    };
    add_stage("conv0", 1, ch, 15, 1, 1);
    for (int s = 0; s < spec.num_grouped_stages; ++s) {
      const int out_ch = std::min(ch * spec.channel_multiplier,
                                  spec.max_channels);
      add_stage("grouped" + std::to_string(s), ch, out_ch, 41,
                spec.downsample_factor, spec.groups);
      ch = out_ch;
    }
    add_stage("conv_post", ch, ch, 5, 1, 1);
    net.logit.init(params_, prefix + ".logit", ch, 1, 3, 1, 1, rng);
  }
}

DiscriminatorOutput MultiScaleDiscriminator::forward(nn::Tape& tape,
                                                     const nn::Tensor& y,
                                                     bool train_params) const {
  SEANET_CHECK(y.defined() && y.shape().c == 1, ErrorCategory::kShape,
               "discriminator: expects a single-channel waveform");
  DiscriminatorOutput out;
  nn::Tensor input = y;
  for (int k = 0; k < spec_.num_scales; ++k) {
    if (k > 0) input = nn::avg_pool_4_2_1(tape, input);  // 1x, 2x, 4x
    nn::Tensor x = input;
    std::vector<nn::Tensor> feats;
    for (const Stage& st : scales_[k].stages) {
      x = st.conv.forward(tape, x, train_params);
      x = st.norm.forward(tape, x, train_params);
      x = nn::leaky_relu(tape, x, spec_.leaky_slope);
      feats.push_back(x);
    }
    out.logits.push_back(scales_[k].logit.forward(tape, x, train_params));
    out.features.push_back(std::move(feats));
  }
  return out;
}

void MultiScaleDiscriminator::load_tensors(
    const std::map<std::string, nn::Tensor>& tensors) {
  for (auto& [name, p] : params_.items) {
    auto it = tensors.find(name);
    SEANET_CHECK(it != tensors.end(), ErrorCategory::kIo,
                 "checkpoint missing discriminator tensor: " + name);
    SEANET_CHECK(it->second.shape() == p.shape(), ErrorCategory::kIo,
                 "checkpoint tensor shape mismatch: " + name);
    std::copy(it->second.data(), it->second.data() + p.numel(), p.data());
  }
}

int64_t count_parameters(const DiscriminatorSpec& spec) {
  return MultiScaleDiscriminator(spec).parameter_count();
}

}  // namespace seanet
