// src/model/discriminator.h

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

#ifndef SEANET_MODEL_DISCRIMINATOR_H_
#define SEANET_MODEL_DISCRIMINATOR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "model/layers.h"

namespace seanet {

// Three structurally identical fully convolutional discriminators judging
// the waveform at 1x, 2x and 4x downsampled resolutions. Each one: an
// initial plain convolution, four grouped strided convolutions, then two
// plain convolutions; layer norm + leaky ReLU everywhere but the logit
// layer.
struct DiscriminatorSpec {
  int num_scales = 3;
  int base_channels = 16;
  int max_channels = 1024;
  int groups = 4;
  int downsample_factor = 4;
  int channel_multiplier = 4;
  int num_grouped_stages = 4;
  float leaky_slope = 0.3f;

  std::string to_json() const;
  static DiscriminatorSpec from_json(const std::string& text);
};

// Per-scale logits plus the ordered internal feature maps the feature-
// matching loss consumes.
struct DiscriminatorOutput {
  std::vector<nn::Tensor> logits;                  // K entries, (B, 1, T_k)
  std::vector<std::vector<nn::Tensor>> features;   // K x L post-activation maps
};

class MultiScaleDiscriminator {
 public:
  explicit MultiScaleDiscriminator(const DiscriminatorSpec& spec,
                                   uint64_t seed = 2);

  // y: (B, 1, T) speech-domain waveform; the conditioning channel never
  // reaches the discriminator.
  DiscriminatorOutput forward(nn::Tape& tape, const nn::Tensor& y,
                              bool train_params) const;

  const DiscriminatorSpec& spec() const { return spec_; }
  nn::ParamSet& params() { return params_; }
  const nn::ParamSet& params() const { return params_; }
  int64_t parameter_count() const { return params_.total_elements(); }

  void load_tensors(const std::map<std::string, nn::Tensor>& tensors);

 private:
  struct Stage {
    ConvPlain conv;
    LayerNormChannels norm;
  };
  struct ScaleNet {
    std::vector<Stage> stages;  // all but the logit layer
    ConvPlain logit;
  };

  DiscriminatorSpec spec_;
  nn::ParamSet params_;
  std::vector<ScaleNet> scales_;
};

int64_t count_parameters(const DiscriminatorSpec& spec);

}  // namespace seanet

#endif  // SEANET_MODEL_DISCRIMINATOR_H_
