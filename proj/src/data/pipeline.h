// src/data/pipeline.h

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

#ifndef SEANET_DATA_PIPELINE_H_
#define SEANET_DATA_PIPELINE_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "data/manifest.h"
#include "model/generator.h"
#include "nn/rng.h"
#include "signal/waveform.h"

namespace seanet {

// Aligned (noisy, conditioning, clean) triple at a common rate. In
// accel-synthesis mode x_m == y_m (no mixing) and x_a holds the real
// accelerometer target.
struct TrainingExample {
  Waveform x_m;  // noisy microphone, 1 channel
  Waveform x_a;  // conditioning, >= 1 channel; empty when not configured
  Waveform y_m;  // clean target, 1 channel
  std::vector<float> interferer_scaled;  // g*n, same crop as x_m
};

// out = clean + 10^(gain_db/20) * fit(interferer), where fit crops at
// `offset` when the interferer is longer and tiles cyclically when shorter.
// No clipping is applied; the mixture may exceed [-1, 1].
Waveform mix_with_offset(const Waveform& clean, const Waveform& interferer,
                         double gain_db, int64_t offset);

// Same, with the offset drawn from the rng.
Waveform mix(const Waveform& clean, const Waveform& interferer, double gain_db,
             Rng& rng);

// Runs a 1-in/1-out generator over the clean waveform (padded to the total
// stride, trimmed after) to produce a synthetic conditioning channel.
Waveform synthesize_accelerometer(const Waveform& clean, const Generator& model);

struct DataConfig {
  int crop_length = 16384;   // multiple of the generator stride; 0 = no crop
  int accel_channels = 1;    // 0 disables the conditioning channel
  int accel_axis = 0;        // first accelerometer channel to use
  bool accel_synth_mode = false;  // map clean -> accel; requires real accel
  std::string synth_checkpoint;   // synthesize x_a when accel_path is absent
  double high_pass_hz = 20.0;
};

// Deterministic example construction over preprocessed sources. make() is a
// pure function of (index, rng_seed); the internal source cache is shared
// and thread-safe.
class ExampleFactory {
 public:
  ExampleFactory(DatasetManifest manifest, DataConfig cfg);

  int64_t size() const { return static_cast<int64_t>(manifest_.entries.size()); }
  const DatasetManifest& manifest() const { return manifest_; }
  const DataConfig& config() const { return cfg_; }

  TrainingExample make(int64_t index, uint64_t rng_seed) const;

  // Full-length variant used by evaluation and mixture materialization.
  TrainingExample make_full(int64_t index, uint64_t rng_seed) const;

 private:
  enum class SourceKind { kClean, kAccel, kNoise, kSynthAccel };
  struct CachedSource {
    Waveform wave;
    int source_rate = 0;  // rate of the underlying file, before resampling
  };
  const CachedSource& prepared(const std::string& path, SourceKind kind,
                               int target_rate) const;
  TrainingExample build(int64_t index, uint64_t rng_seed,
                        int64_t crop_length) const;

  DatasetManifest manifest_;
  DataConfig cfg_;
  std::unique_ptr<Generator> synth_;
  mutable std::mutex mu_;
  mutable std::map<std::string, CachedSource> cache_;
};

}  // namespace seanet

#endif  // SEANET_DATA_PIPELINE_H_
