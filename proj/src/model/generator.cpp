// src/model/generator.cpp

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

#include "model/generator.h"

#include <algorithm>

#include "common/error.h"
#include "json.hpp"

namespace seanet {

std::string GeneratorSpec::to_json() const {
  nlohmann::json j;
  j["audio_channels"] = audio_channels;
  j["accel_channels"] = accel_channels;
  j["out_channels"] = out_channels;
  j["base_channels"] = base_channels;
  j["strides"] = strides;
  j["dilations"] = dilations;
  return j.dump(2);
}

GeneratorSpec GeneratorSpec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  SEANET_CHECK(!j.is_discarded(), ErrorCategory::kConfig,
               "invalid generator spec JSON");
  GeneratorSpec s;
  s.audio_channels = j.value("audio_channels", 1);
  s.accel_channels = j.value("accel_channels", 1);
  s.out_channels = j.value("out_channels", 1);
  s.base_channels = j.value("base_channels", 32);
  if (j.contains("strides")) s.strides = j["strides"].get<std::vector<int>>();
  if (j.contains("dilations"))
    s.dilations = j["dilations"].get<std::vector<int>>();
  return s;
}

Generator::Generator(const GeneratorSpec& spec, uint64_t seed) : spec_(spec) {
  SEANET_CHECK(spec.audio_channels >= 1 && spec.accel_channels >= 0,
               ErrorCategory::kConfig, "generator: bad channel configuration");
  SEANET_CHECK(!spec.strides.empty(), ErrorCategory::kConfig,
               "generator: no strides");
  Rng rng(mix_seed(seed, 0x67656e /* "gen" */));

  const int nb = static_cast<int>(spec.strides.size());
  int ch = spec.base_channels;
  conv_in_.init(params_, "conv_in", spec.in_channels(), ch, 7, 1, 1, rng);

  enc_.resize(nb);
  for (int i = 0; i < nb; ++i) {
    const int s = spec.strides[i];
    enc_[i].units.resize(spec.dilations.size());
    for (size_t u = 0; u < spec.dilations.size(); ++u) {
      const std::string base =
          "enc" + std::to_string(i) + ".unit" + std::to_string(u);
      enc_[i].units[u].conv_dil.init(params_, base + ".conv_dil", ch, ch, 3, 1,
                                     spec.dilations[u], rng);
      enc_[i].units[u].conv_one.init(params_, base + ".conv_one", ch, ch, 1, 1,
                                     1, rng);
    }
    enc_[i].down.init(params_, "enc" + std::to_string(i) + ".down", ch, 2 * ch,
                      2 * s, s, 1, rng);
    ch *= 2;
  }
  enc_post_.init(params_, "enc_post", ch, ch, 7, 1, 1, rng);
  dec_pre_.init(params_, "dec_pre", ch, ch, 7, 1, 1, rng);

  dec_.resize(nb);
  for (int i = 0; i < nb; ++i) {
    const int s = spec.strides[nb - 1 - i];  // reverse order
    dec_[i].up.init(params_, "dec" + std::to_string(i) + ".up", ch, ch / 2,
                    2 * s, s, rng);
    ch /= 2;
    dec_[i].units.resize(spec.dilations.size());
    for (size_t u = 0; u < spec.dilations.size(); ++u) {
      const std::string base =
          "dec" + std::to_string(i) + ".unit" + std::to_string(u);
      dec_[i].units[u].conv_dil.init(params_, base + ".conv_dil", ch, ch, 3, 1,
                                     spec.dilations[u], rng);
      dec_[i].units[u].conv_one.init(params_, base + ".conv_one", ch, ch, 1, 1,
                                     1, rng);
    }
  }
  conv_out_.init(params_, "conv_out", ch, spec.out_channels, 7, 1, 1, rng);
  skip_proj_.init(params_, "skip_proj", spec.audio_channels,
                  spec.out_channels, /*kernel=*/1, /*stride=*/1, /*groups=*/1,
                  rng);
}

nn::Tensor Generator::run_units(nn::Tape& tape,
                                const std::vector<ResUnit>& units,
                                nn::Tensor x, bool train_params) const {
  for (const ResUnit& u : units) {
    nn::Tensor h = u.conv_dil.forward(tape, nn::elu(tape, x), train_params);
    h = u.conv_one.forward(tape, nn::elu(tape, h), train_params);
    x = nn::add(tape, x, h);
  }
  return x;
}

Generator::Forward Generator::forward(nn::Tape& tape, const nn::Tensor& audio,
                                      const nn::Tensor& accel,
                                      bool train_params) const {
  SEANET_CHECK(audio.defined(), ErrorCategory::kShape,
               "generator: audio input required");
  SEANET_CHECK(audio.shape().c == spec_.audio_channels, ErrorCategory::kShape,
               "generator: expected " + std::to_string(spec_.audio_channels) +
                   " audio channel(s), got " + std::to_string(audio.shape().c));
  const int T = audio.shape().t;
  const int stride_total = spec_.total_stride();
  SEANET_CHECK(T > 0 && T % stride_total == 0, ErrorCategory::kShape,
               "generator: input length " + std::to_string(T) +
                   " is not a multiple of " + std::to_string(stride_total));

  nn::Tensor x;
  if (spec_.accel_channels > 0) {
    SEANET_CHECK(accel.defined(), ErrorCategory::kMissingModality,
                 "generator: accelerometer input required by spec");
    SEANET_CHECK(accel.shape().c == spec_.accel_channels &&
                     accel.shape().t == T && accel.shape().b == audio.shape().b,
                 ErrorCategory::kShape,
                 "generator: accelerometer input shape mismatch");
    x = nn::concat_channels(tape, audio, accel);
  } else {
    x = audio;
  }

  x = conv_in_.forward(tape, x, train_params);

  std::vector<nn::Tensor> skips;
  for (const EncBlock& blk : enc_) {
    x = run_units(tape, blk.units, x, train_params);
    skips.push_back(x);
    x = blk.down.forward(tape, nn::elu(tape, x), train_params);
  }
  x = enc_post_.forward(tape, nn::elu(tape, x), train_params);
  const int bottleneck_length = x.shape().t;

  x = dec_pre_.forward(tape, nn::elu(tape, x), train_params);
  for (size_t i = 0; i < dec_.size(); ++i) {
    x = dec_[i].up.forward(tape, nn::elu(tape, x), train_params);
    x = nn::add(tape, x, skips[dec_.size() - 1 - i]);
    x = run_units(tape, dec_[i].units, x, train_params);
  }

  // Out-most skip: only the speech channel feeds the output path, joined
  // past the decoder stack so the conditioning channel cannot leak through.
  nn::Tensor pre = conv_out_.forward(tape, nn::elu(tape, x), train_params);
  nn::Tensor skip = skip_proj_.forward(tape, audio, train_params);
  nn::Tensor out = nn::tanh_op(tape, nn::add(tape, pre, skip));
  return Forward{out, bottleneck_length};
}

void Generator::load_tensors(const std::map<std::string, nn::Tensor>& tensors) {
  for (auto& [name, p] : params_.items) {
    auto it = tensors.find(name);
    SEANET_CHECK(it != tensors.end(), ErrorCategory::kIo,
                 "checkpoint missing generator tensor: " + name);
    SEANET_CHECK(it->second.shape() == p.shape(), ErrorCategory::kIo,
                 "checkpoint tensor shape mismatch: " + name);
    std::copy(it->second.data(), it->second.data() + p.numel(), p.data());
  }
}

void Generator::zero_decoder_weights() {
  for (auto& [name, p] : params_.items) {
    const bool decoder_side = name.rfind("dec", 0) == 0 ||
                              name.rfind("conv_out", 0) == 0;
    if (decoder_side) std::fill(p.data(), p.data() + p.numel(), 0.0f);
  }
}

int64_t count_parameters(const GeneratorSpec& spec) {
  return Generator(spec).parameter_count();
}

}  // namespace seanet
