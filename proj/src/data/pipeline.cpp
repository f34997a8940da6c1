// src/data/pipeline.cpp

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

#include "data/pipeline.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "model/checkpoint.h"
#include "signal/dsp.h"
#include "signal/wav_io.h"

namespace seanet {

namespace {

constexpr int kPipelineStride = 256;  // generator total stride

Waveform crop_or_tile(const Waveform& w, int64_t offset, int64_t length) {
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.channels.resize(w.channels.size());
  const int64_t n = w.length();
  for (size_t c = 0; c < w.channels.size(); ++c) {
    out.channels[c].resize(static_cast<size_t>(length));
    for (int64_t i = 0; i < length; ++i)
      out.channels[c][static_cast<size_t>(i)] =
          w.channels[c][static_cast<size_t>((offset + i) % n)];
  }
  return out;
}

std::vector<float> slice_or_tile(const std::vector<float>& x, int64_t offset,
                                 int64_t length) {
  std::vector<float> out(static_cast<size_t>(length));
  const int64_t n = static_cast<int64_t>(x.size());
  for (int64_t i = 0; i < length; ++i)
    out[static_cast<size_t>(i)] = x[static_cast<size_t>((offset + i) % n)];
  return out;
}

}  // namespace

Waveform mix_with_offset(const Waveform& clean, const Waveform& interferer,
                         double gain_db, int64_t offset) {
  SEANET_CHECK(clean.sample_rate == interferer.sample_rate,
               ErrorCategory::kInvalidArgument,
               "mix: sample-rate mismatch (" +
                   std::to_string(clean.sample_rate) + " vs " +
                   std::to_string(interferer.sample_rate) + ")");
  SEANET_CHECK(interferer.length() > 0, ErrorCategory::kInvalidArgument,
               "mix: empty interferer");
  SEANET_CHECK(clean.num_channels() == 1 && interferer.num_channels() == 1,
               ErrorCategory::kInvalidArgument,
               "mix: expects mono clean and interferer");
  const int64_t n = clean.length();
  const int64_t ni = interferer.length();
  const float g = static_cast<float>(std::pow(10.0, gain_db / 20.0));

  Waveform out = clean;
  const std::vector<float>& iv = interferer.mono();
  std::vector<float>& ov = out.ch(0);
  if (ni >= n) {
    if (offset > ni - n) offset = ni - n;
    if (offset < 0) offset = 0;
    for (int64_t t = 0; t < n; ++t)
      ov[static_cast<size_t>(t)] += g * iv[static_cast<size_t>(offset + t)];
  } else {
    if (offset < 0) offset = 0;
    for (int64_t t = 0; t < n; ++t)
      ov[static_cast<size_t>(t)] +=
          g * iv[static_cast<size_t>((offset + t) % ni)];
  }
  return out;
}

Waveform mix(const Waveform& clean, const Waveform& interferer, double gain_db,
             Rng& rng) {
  const int64_t n = clean.length();
  const int64_t ni = interferer.length();
  const int64_t span = ni >= n ? ni - n + 1 : ni;
  return mix_with_offset(clean, interferer, gain_db,
                         rng.next_below(std::max<int64_t>(1, span)));
}

Waveform synthesize_accelerometer(const Waveform& clean,
                                  const Generator& model) {
  SEANET_CHECK(model.spec().in_channels() == 1 &&
                   model.spec().out_channels == 1,
               ErrorCategory::kInvalidArgument,
               "accelerometer synthesis needs a 1-in/1-out generator");
  SEANET_CHECK(clean.num_channels() == 1, ErrorCategory::kInvalidArgument,
               "accelerometer synthesis expects mono input");
  const int64_t n = clean.length();
  const int stride = model.spec().total_stride();
  const int64_t padded = (n + stride - 1) / stride * stride;

  nn::Tensor audio = nn::Tensor::zeros({1, 1, static_cast<int>(padded)}, false);
  std::copy(clean.mono().begin(), clean.mono().end(), audio.data());
  nn::Tape tape;
  Generator::Forward fwd = model.forward(tape, audio, nn::Tensor(), false);

  Waveform out;
  out.sample_rate = clean.sample_rate;
  out.channels.emplace_back(fwd.out.data(), fwd.out.data() + n);
  return out;
}

ExampleFactory::ExampleFactory(DatasetManifest manifest, DataConfig cfg)
    : manifest_(std::move(manifest)), cfg_(cfg) {
  SEANET_CHECK(!manifest_.entries.empty(), ErrorCategory::kConfig,
               "empty dataset manifest");
  if (cfg_.crop_length > 0)
    SEANET_CHECK(cfg_.crop_length % kPipelineStride == 0,
                 ErrorCategory::kInvalidArgument,
                 "crop_length must be a multiple of " +
                     std::to_string(kPipelineStride));
  if (!cfg_.synth_checkpoint.empty()) {
    SEANET_CHECK(cfg_.accel_channels == 1, ErrorCategory::kConfig,
                 "synthesized conditioning provides exactly one channel");
    synth_ = load_generator(cfg_.synth_checkpoint);
  }
}

const ExampleFactory::CachedSource& ExampleFactory::prepared(
    const std::string& path, SourceKind kind, int target_rate) const {
  std::string key;
  switch (kind) {
    case SourceKind::kClean: key = "c#"; break;
    case SourceKind::kNoise: key = "n#"; break;
    case SourceKind::kAccel: key = "a" + std::to_string(target_rate) + "#"; break;
    case SourceKind::kSynthAccel: key = "s#"; break;
  }
  key += path;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  CachedSource src;
  if (kind == SourceKind::kSynthAccel) {
    const CachedSource& clean = [&]() -> const CachedSource& {
      auto cit = cache_.find("c#" + path);
      SEANET_CHECK(cit != cache_.end(), ErrorCategory::kInternal,
                   "synth accel requested before clean source");
      return cit->second;
    }();
    src.wave = synthesize_accelerometer(clean.wave, *synth_);
    src.source_rate = clean.source_rate;
  } else {
    Waveform w = read_wav(path);
    src.source_rate = w.sample_rate;
    if (kind == SourceKind::kAccel) {
      SEANET_CHECK(cfg_.accel_axis + cfg_.accel_channels <= w.num_channels(),
                   ErrorCategory::kInvalidArgument,
                   "accelerometer file has too few channels: " + path);
      Waveform axes;
      axes.sample_rate = w.sample_rate;
      for (int c = 0; c < cfg_.accel_channels; ++c)
        axes.channels.push_back(w.ch(cfg_.accel_axis + c));
      w = std::move(axes);
    } else {
      w = w.select_channel(0);
    }
    w = high_pass(w, cfg_.high_pass_hz);
    w = normalize(w);
    if (kind == SourceKind::kAccel && w.sample_rate != target_rate)
      w = resample(w, target_rate);
    src.wave = std::move(w);
  }
  return cache_.emplace(std::move(key), std::move(src)).first->second;
}

TrainingExample ExampleFactory::make(int64_t index, uint64_t rng_seed) const {
  return build(index, rng_seed, cfg_.crop_length);
}

TrainingExample ExampleFactory::make_full(int64_t index,
                                          uint64_t rng_seed) const {
  return build(index, rng_seed, 0);
}

TrainingExample ExampleFactory::build(int64_t index, uint64_t rng_seed,
                                      int64_t crop_length) const {
  SEANET_CHECK(index >= 0 && index < size(), ErrorCategory::kInvalidArgument,
               "example index out of range");
  const ManifestEntry& entry = manifest_.entries[static_cast<size_t>(index)];
  Rng rng(rng_seed);

  const Waveform& clean = prepared(entry.clean_path, SourceKind::kClean, 0).wave;
  const int rate = clean.sample_rate;

  // Conditioning channel, aligned with the clean signal.
  Waveform accel;
  if (cfg_.accel_channels > 0 || cfg_.accel_synth_mode) {
    if (!entry.accel_path.empty()) {
      const CachedSource& a =
          prepared(entry.accel_path, SourceKind::kAccel, rate);
      const int64_t slack =
          std::max<int64_t>(1, (rate + a.source_rate - 1) / a.source_rate);
      const int64_t diff = std::llabs(a.wave.length() - clean.length());
      SEANET_CHECK(diff <= slack, ErrorCategory::kInvalidArgument,
                   "clean/accel duration mismatch of " + std::to_string(diff) +
                       " samples for " + entry.clean_path);
      accel = a.wave;
    } else if (synth_ && !cfg_.accel_synth_mode) {
      accel = prepared(entry.clean_path, SourceKind::kSynthAccel, rate).wave;
    } else {
      fail(ErrorCategory::kMissingModality,
           "entry lacks accel_path and no synthesis model is configured: " +
               entry.clean_path);
    }
  }

  // Common usable length across modalities.
  int64_t full = clean.length();
  if (accel.num_channels() > 0) full = std::min(full, accel.length());

  TrainingExample ex;
  if (cfg_.accel_synth_mode) {
    // Clean audio in, real accelerometer out; no mixing.
    SEANET_CHECK(accel.num_channels() >= 1, ErrorCategory::kMissingModality,
                 "accel-synthesis training requires real accelerometer data");
    int64_t want = crop_length > 0 ? crop_length : full;
    int64_t offset = 0;
    if (full > want) offset = rng.next_below(full - want + 1);
    ex.y_m = crop_or_tile(clean, offset, want);
    ex.x_m = ex.y_m;
    ex.x_a = crop_or_tile(accel.select_channel(0), offset, want);
    return ex;
  }

  // Interferer choice.
  const Waveform* interferer = nullptr;
  if (manifest_.scenario == Scenario::kMixedSpeech) {
    std::vector<int64_t> candidates;
    for (int64_t i = 0; i < size(); ++i)
      if (manifest_.entries[static_cast<size_t>(i)].speaker_id !=
          entry.speaker_id)
        candidates.push_back(i);
    SEANET_CHECK(!candidates.empty(), ErrorCategory::kConfig,
                 "mixed_speech needs clean entries from at least two speakers");
    const int64_t pick =
        candidates[static_cast<size_t>(rng.next_below(
            static_cast<int64_t>(candidates.size())))];
    interferer =
        &prepared(manifest_.entries[static_cast<size_t>(pick)].clean_path,
                  SourceKind::kClean, 0)
             .wave;
  } else {
    SEANET_CHECK(!manifest_.noise_sources.empty(), ErrorCategory::kConfig,
                 "mixed_noise needs a non-empty noise list");
    const int64_t pick = rng.next_below(
        static_cast<int64_t>(manifest_.noise_sources.size()));
    interferer = &prepared(manifest_.noise_sources[static_cast<size_t>(pick)],
                           SourceKind::kNoise, 0)
                      .wave;
  }
  SEANET_CHECK(interferer->sample_rate == rate, ErrorCategory::kInvalidArgument,
               "interferer sample rate differs from clean source");

  // Full-length mix, then one shared crop window.
  Waveform clean_cut = crop_or_tile(clean, 0, full);
  const int64_t ni = interferer->length();
  const int64_t span = ni >= full ? ni - full + 1 : ni;
  const int64_t mix_offset = rng.next_below(std::max<int64_t>(1, span));
  Waveform noisy_full =
      mix_with_offset(clean_cut, *interferer, manifest_.mix_gain_db, mix_offset);

  int64_t want = crop_length > 0 ? crop_length : full;
  int64_t offset = 0;
  if (full > want) offset = rng.next_below(full - want + 1);

  ex.y_m = crop_or_tile(clean_cut, offset, want);
  ex.x_m = crop_or_tile(noisy_full, offset, want);
  if (accel.num_channels() > 0) ex.x_a = crop_or_tile(accel, offset, want);

  // Stored residual: x_m must recompose as y_m + g*n exactly.
  std::vector<float> noise_full(static_cast<size_t>(full));
  for (int64_t i = 0; i < full; ++i)
    noise_full[static_cast<size_t>(i)] =
        noisy_full.ch(0)[static_cast<size_t>(i)] -
        clean_cut.ch(0)[static_cast<size_t>(i)];
  ex.interferer_scaled = slice_or_tile(noise_full, offset, want);
  for (int64_t i = 0; i < want; ++i) {
    const float resid = ex.x_m.ch(0)[static_cast<size_t>(i)] -
                        ex.y_m.ch(0)[static_cast<size_t>(i)] -
                        ex.interferer_scaled[static_cast<size_t>(i)];
    SEANET_CHECK(std::fabs(resid) <= 1e-6f, ErrorCategory::kInternal,
                 "mixture residual check failed");
  }
  return ex;
}

}  // namespace seanet
