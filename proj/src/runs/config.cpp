// src/runs/config.cpp

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

#include "runs/config.h"

#include "common/error.h"
#include "json.hpp"

namespace seanet {

RunConfig RunConfig::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  SEANET_CHECK(!j.is_discarded() && j.is_object(), ErrorCategory::kConfig,
               "run config is not a JSON object");
  RunConfig c;
  c.manifest = j.value("manifest", c.manifest);
  c.noise_list = j.value("noise_list", c.noise_list);
  c.scenario = j.value("scenario", c.scenario);
  c.mix_gain_db = j.value("mix_gain_db", c.mix_gain_db);
  c.crop_length = j.value("crop_length", c.crop_length);
  c.accel_channels = j.value("accel_channels", c.accel_channels);
  c.accel_axis = j.value("accel_axis", c.accel_axis);
  c.synth_checkpoint = j.value("synth_checkpoint", c.synth_checkpoint);
  c.out_dir = j.value("out_dir", c.out_dir);
  c.seed = j.value("seed", c.seed);
  c.num_workers = j.value("num_workers", c.num_workers);
  c.base_channels = j.value("base_channels", c.base_channels);
  c.audio_only = j.value("audio_only", c.audio_only);
  c.disc_base_channels = j.value("disc_base_channels", c.disc_base_channels);
  c.disc_max_channels = j.value("disc_max_channels", c.disc_max_channels);
  c.batch_size = j.value("batch_size", c.batch_size);
  c.learning_rate = j.value("learning_rate", c.learning_rate);
  c.beta1 = j.value("beta1", c.beta1);
  c.beta2 = j.value("beta2", c.beta2);
  c.total_steps = j.value("total_steps", c.total_steps);
  c.lambda = j.value("lambda", c.lambda);
  c.checkpoint_every = j.value("checkpoint_every", c.checkpoint_every);
  c.resume = j.value("resume", c.resume);
  c.checkpoint = j.value("checkpoint", c.checkpoint);
  c.decimation_factor = j.value("decimation_factor", c.decimation_factor);
  c.decimation_sweep = j.value("decimation_sweep", c.decimation_sweep);
  c.zero_accel = j.value("zero_accel", c.zero_accel);
  c.emit_plot = j.value("emit_plot", c.emit_plot);
  c.in_audio = j.value("in_audio", c.in_audio);
  c.in_accel = j.value("in_accel", c.in_accel);
  c.out_wav = j.value("out_wav", c.out_wav);
  c.mixtures_per_entry = j.value("mixtures_per_entry", c.mixtures_per_entry);
  return c;
}

std::string RunConfig::to_json() const {
  nlohmann::json j;
  j["manifest"] = manifest;
  j["noise_list"] = noise_list;
  j["scenario"] = scenario;
  j["mix_gain_db"] = mix_gain_db;
  j["crop_length"] = crop_length;
  j["accel_channels"] = accel_channels;
  j["accel_axis"] = accel_axis;
  j["synth_checkpoint"] = synth_checkpoint;
  j["out_dir"] = out_dir;
  j["seed"] = seed;
  j["num_workers"] = num_workers;
  j["base_channels"] = base_channels;
  j["audio_only"] = audio_only;
  j["disc_base_channels"] = disc_base_channels;
  j["disc_max_channels"] = disc_max_channels;
  j["batch_size"] = batch_size;
  j["learning_rate"] = learning_rate;
  j["beta1"] = beta1;
  j["beta2"] = beta2;
  j["total_steps"] = total_steps;
  j["lambda"] = lambda;
  j["checkpoint_every"] = checkpoint_every;
  j["resume"] = resume;
  j["checkpoint"] = checkpoint;
  j["decimation_factor"] = decimation_factor;
  j["decimation_sweep"] = decimation_sweep;
  j["zero_accel"] = zero_accel;
  j["emit_plot"] = emit_plot;
  j["in_audio"] = in_audio;
  j["in_accel"] = in_accel;
  j["out_wav"] = out_wav;
  j["mixtures_per_entry"] = mixtures_per_entry;
  return j.dump(2);
}

}  // namespace seanet
