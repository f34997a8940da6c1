// src/model/generator.h

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

#ifndef SEANET_MODEL_GENERATOR_H_
#define SEANET_MODEL_GENERATOR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "model/layers.h"

namespace seanet {

// Symmetric UNet over waveforms. The encoder halves/halves/eighths/eighths
// the time axis (total stride 256) while doubling channels; the decoder
// mirrors it. Weight-normalized convolutions, ELU activations, tanh output.
struct GeneratorSpec {
  int audio_channels = 1;   // always the first input channel
  int accel_channels = 1;   // 0 for the audio-only variant
  int out_channels = 1;
  int base_channels = 32;
  std::vector<int> strides{2, 2, 8, 8};
  std::vector<int> dilations{1, 3, 9};

  int in_channels() const { return audio_channels + accel_channels; }
  int total_stride() const {
    int p = 1;
    for (int s : strides) p *= s;
    return p;
  }
  std::string to_json() const;
  static GeneratorSpec from_json(const std::string& text);
};

class Generator {
 public:
  explicit Generator(const GeneratorSpec& spec, uint64_t seed = 1);

  struct Forward {
    nn::Tensor out;             // (B, 1, T)
    int bottleneck_length = 0;  // time extent at the narrowest point
  };

  // audio: (B, audio_channels, T); accel: (B, accel_channels, T), undefined
  // when the spec has no accelerometer channels. T must be a multiple of
  // total_stride().
  Forward forward(nn::Tape& tape, const nn::Tensor& audio,
                  const nn::Tensor& accel, bool train_params) const;

  const GeneratorSpec& spec() const { return spec_; }
  nn::ParamSet& params() { return params_; }
  const nn::ParamSet& params() const { return params_; }
  int64_t parameter_count() const { return params_.total_elements(); }

  void load_tensors(const std::map<std::string, nn::Tensor>& tensors);

  // Zeroes every decoder-side weight while leaving the encoder and the
  // out-most skip projection untouched. Test probe for skip isolation.
  void zero_decoder_weights();

 private:
  struct ResUnit {
    ConvWN conv_dil;  // kernel 3, dilated
    ConvWN conv_one;  // kernel 1
  };
  struct EncBlock {
    std::vector<ResUnit> units;
    ConvWN down;
  };
  struct DecBlock {
    ConvTWN up;
    std::vector<ResUnit> units;
  };

  nn::Tensor run_units(nn::Tape& tape, const std::vector<ResUnit>& units,
                       nn::Tensor x, bool train_params) const;

  GeneratorSpec spec_;
  nn::ParamSet params_;
  ConvWN conv_in_;
  std::vector<EncBlock> enc_;
  ConvWN enc_post_;
  ConvWN dec_pre_;
  std::vector<DecBlock> dec_;
  ConvWN conv_out_;
  // Out-most skip: 1x1 over the speech channel. Plain parameterization; a
  // weight-normalized 1x1 single-channel weight would reduce to sign(v) and
  // stop receiving magnitude gradients.
  ConvPlain skip_proj_;
};

// Deterministic parameter count for a spec (architecture freeze).
int64_t count_parameters(const GeneratorSpec& spec);

}  // namespace seanet

#endif  // SEANET_MODEL_GENERATOR_H_
