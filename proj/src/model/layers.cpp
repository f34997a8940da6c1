// src/model/layers.cpp

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

#include "model/layers.h"

#include <cmath>

#include "common/error.h"

namespace seanet {

namespace {

// Uniform(-sqrt(1/fan_in), +sqrt(1/fan_in)) for weights and biases.
void fill_uniform_fan_in(nn::Tensor& t, int fan_in, Rng& rng) {
  const float bound = 1.0f / std::sqrt(static_cast<float>(fan_in));
  float* p = t.data();
  for (int64_t i = 0, n = t.numel(); i < n; ++i)
    p[i] = rng.next_uniform(-bound, bound);
}

// g[r] = ||v[r]|| so the effective weight starts equal to v.
void init_wn_gain(const nn::Tensor& v, nn::Tensor& g, int rows) {
  const int64_t cols = v.numel() / rows;
  for (int r = 0; r < rows; ++r) {
    const float* vr = v.data() + r * cols;
    double acc = 0.0;
    for (int64_t i = 0; i < cols; ++i) acc += double(vr[i]) * vr[i];
    g.data()[r] = static_cast<float>(std::sqrt(acc));
  }
}

}  // namespace

void ConvWN::init(nn::ParamSet& ps, const std::string& name, int in_channels,
                  int out_channels, int kernel, int stride, int dilation,
                  Rng& rng) {
  in_ch = in_channels;
  out_ch = out_channels;
  geom = {kernel, stride, dilation, 1};
  const int fan_in = in_channels * kernel;
  v = ps.add(name + ".v",
             nn::Tensor::zeros({1, out_channels, in_channels * kernel}, true));
  g = ps.add(name + ".g", nn::Tensor::zeros({1, out_channels, 1}, true));
  b = ps.add(name + ".b", nn::Tensor::zeros({1, out_channels, 1}, true));
  fill_uniform_fan_in(v, fan_in, rng);
  init_wn_gain(v, g, out_channels);
  fill_uniform_fan_in(b, fan_in, rng);
}

nn::Tensor ConvWN::forward(nn::Tape& tape, const nn::Tensor& x,
                           bool train_params) const {
  const nn::Tensor vv = train_params ? v : v.detached();
  const nn::Tensor gg = train_params ? g : g.detached();
  const nn::Tensor bb = train_params ? b : b.detached();
  nn::Tensor w = nn::weight_norm(tape, vv, gg, out_ch);
  return nn::conv1d(tape, x, w, bb, geom);
}

void ConvTWN::init(nn::ParamSet& ps, const std::string& name, int in_channels,
                   int out_channels, int kernel_size, int stride_size,
                   Rng& rng) {
  in_ch = in_channels;
  out_ch = out_channels;
  kernel = kernel_size;
  stride = stride_size;
  const int fan_in = in_channels * kernel_size / stride_size;
  v = ps.add(name + ".v",
             nn::Tensor::zeros({1, in_channels, out_channels * kernel}, true));
  g = ps.add(name + ".g", nn::Tensor::zeros({1, in_channels, 1}, true));
  b = ps.add(name + ".b", nn::Tensor::zeros({1, out_channels, 1}, true));
  fill_uniform_fan_in(v, fan_in, rng);
  init_wn_gain(v, g, in_channels);
  fill_uniform_fan_in(b, fan_in, rng);
}

nn::Tensor ConvTWN::forward(nn::Tape& tape, const nn::Tensor& x,
                            bool train_params) const {
  const nn::Tensor vv = train_params ? v : v.detached();
  const nn::Tensor gg = train_params ? g : g.detached();
  const nn::Tensor bb = train_params ? b : b.detached();
  nn::Tensor w = nn::weight_norm(tape, vv, gg, in_ch);
  return nn::conv1d_transpose(tape, x, w, bb, out_ch, kernel, stride);
}

void ConvPlain::init(nn::ParamSet& ps, const std::string& name,
                     int in_channels, int out_channels, int kernel, int stride,
                     int groups, Rng& rng) {
  in_ch = in_channels;
  out_ch = out_channels;
  geom = {kernel, stride, 1, groups};
  const int fan_in = in_channels / groups * kernel;
  w = ps.add(name + ".w",
             nn::Tensor::zeros(
                 {1, out_channels, in_channels / groups * kernel}, true));
  b = ps.add(name + ".b", nn::Tensor::zeros({1, out_channels, 1}, true));
  fill_uniform_fan_in(w, fan_in, rng);
  fill_uniform_fan_in(b, fan_in, rng);
}

nn::Tensor ConvPlain::forward(nn::Tape& tape, const nn::Tensor& x,
                              bool train_params) const {
  const nn::Tensor ww = train_params ? w : w.detached();
  const nn::Tensor bb = train_params ? b : b.detached();
  return nn::conv1d(tape, x, ww, bb, geom);
}

void LayerNormChannels::init(nn::ParamSet& ps, const std::string& name,
                             int channels) {
  ch = channels;
  gamma = ps.add(name + ".gamma", nn::Tensor::zeros({1, channels, 1}, true));
  beta = ps.add(name + ".beta", nn::Tensor::zeros({1, channels, 1}, true));
  for (int i = 0; i < channels; ++i) gamma.data()[i] = 1.0f;
}

nn::Tensor LayerNormChannels::forward(nn::Tape& tape, const nn::Tensor& x,
                                      bool train_params) const {
  const nn::Tensor gg = train_params ? gamma : gamma.detached();
  const nn::Tensor bb = train_params ? beta : beta.detached();
  return nn::layer_norm_channels(tape, x, gg, bb);
}

}  // namespace seanet
