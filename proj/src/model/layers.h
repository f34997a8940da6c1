// src/model/layers.h

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

#ifndef SEANET_MODEL_LAYERS_H_
#define SEANET_MODEL_LAYERS_H_

#include <string>

#include "nn/adam.h"
#include "nn/ops.h"
#include "nn/rng.h"
#include "nn/tensor.h"

namespace seanet {

// Weight-normalized 1-D convolution (generator side).
struct ConvWN {
  nn::Tensor v, g, b;
  int in_ch = 0, out_ch = 0;
  nn::ConvGeom geom;

  void init(nn::ParamSet& ps, const std::string& name, int in_channels,
            int out_channels, int kernel, int stride, int dilation, Rng& rng);
  nn::Tensor forward(nn::Tape& tape, const nn::Tensor& x,
                     bool train_params) const;
};

// Weight-normalized transposed convolution (decoder upsampling).
struct ConvTWN {
  nn::Tensor v, g, b;
  int in_ch = 0, out_ch = 0, kernel = 0, stride = 1;

  void init(nn::ParamSet& ps, const std::string& name, int in_channels,
            int out_channels, int kernel_size, int stride_size, Rng& rng);
  nn::Tensor forward(nn::Tape& tape, const nn::Tensor& x,
                     bool train_params) const;
};

// Plain convolution (discriminator side).
struct ConvPlain {
  nn::Tensor w, b;
  int in_ch = 0, out_ch = 0;
  nn::ConvGeom geom;

  void init(nn::ParamSet& ps, const std::string& name, int in_channels,
            int out_channels, int kernel, int stride, int groups, Rng& rng);
  nn::Tensor forward(nn::Tape& tape, const nn::Tensor& x,
                     bool train_params) const;
};

struct LayerNormChannels {
  nn::Tensor gamma, beta;
  int ch = 0;

  void init(nn::ParamSet& ps, const std::string& name, int channels);
  nn::Tensor forward(nn::Tape& tape, const nn::Tensor& x,
                     bool train_params) const;
};

}  // namespace seanet

#endif  // SEANET_MODEL_LAYERS_H_
