// src/runs/config.h

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

#ifndef SEANET_RUNS_CONFIG_H_
#define SEANET_RUNS_CONFIG_H_

#include <cstdint>
#include <string>

namespace seanet {

// Flat run configuration shared by every command. Serialized as JSON: the
// CLI resolves file < environment < flags into one document, and every run
// writes the resolved snapshot next to its outputs.
struct RunConfig {
  // data
  std::string manifest;
  std::string noise_list;
  std::string scenario = "mixed_noise";
  double mix_gain_db = 0.0;
  int crop_length = 16384;
  int accel_channels = 1;
  int accel_axis = 0;
  std::string synth_checkpoint;

  // run control
  std::string out_dir = "runs/out";
  uint64_t seed = 1;
  int num_workers = 1;

  // model
  int base_channels = 32;
  bool audio_only = false;
  int disc_base_channels = 16;
  int disc_max_channels = 1024;

  // training
  int batch_size = 16;
  double learning_rate = 1e-4;
  double beta1 = 0.5;
  double beta2 = 0.9;
  int64_t total_steps = 200000;
  double lambda = 100.0;
  int64_t checkpoint_every = 10000;
  bool resume = false;

  // evaluation / denoising
  std::string checkpoint;
  int decimation_factor = 1;
  bool decimation_sweep = false;
  bool zero_accel = false;
  bool emit_plot = false;
  std::string in_audio;
  std::string in_accel;
  std::string out_wav;

  // make-mixtures
  int mixtures_per_entry = 1;

  static RunConfig from_json(const std::string& text);
  std::string to_json() const;
};

}  // namespace seanet

#endif  // SEANET_RUNS_CONFIG_H_
