// src/capi/capi.cpp

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

#include "seanet/seanet.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "common/error.h"
#include "data/pipeline.h"
#include "eval/evaluate.h"
#include "eval/metrics.h"
#include "model/checkpoint.h"
#include "model/generator.h"
#include "runs/runs.h"
#include "signal/dsp.h"
#include "signal/wav_io.h"

struct seanet_waveform {
  seanet::Waveform w;
};

struct seanet_generator {
  std::unique_ptr<seanet::Generator> g;
};

namespace {

thread_local std::string g_last_error;

seanet_status status_of(seanet::ErrorCategory c) {
  using seanet::ErrorCategory;
  switch (c) {
    case ErrorCategory::kInvalidArgument: return SEANET_ERR_INVALID_ARGUMENT;
    case ErrorCategory::kIo: return SEANET_ERR_IO;
    case ErrorCategory::kShape: return SEANET_ERR_SHAPE;
    case ErrorCategory::kConfig: return SEANET_ERR_CONFIG;
    case ErrorCategory::kMissingModality: return SEANET_ERR_MISSING_MODALITY;
    case ErrorCategory::kUndefinedMetric: return SEANET_ERR_UNDEFINED_METRIC;
    case ErrorCategory::kNonFiniteLoss: return SEANET_ERR_NON_FINITE_LOSS;
    case ErrorCategory::kInternal: return SEANET_ERR_INTERNAL;
  }
  return SEANET_ERR_INTERNAL;
}

template <typename Fn>
seanet_status guarded(Fn&& fn) {
  try {
    fn();
    return SEANET_OK;
  } catch (const seanet::Error& e) {
    g_last_error = e.what();
    return status_of(e.category());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SEANET_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SEANET_ERR_INTERNAL;
  }
}

seanet_status require(bool cond, const char* msg) {
  if (cond) return SEANET_OK;
  g_last_error = msg;
  return SEANET_ERR_INVALID_ARGUMENT;
}

seanet_waveform* wrap(seanet::Waveform w) {
  auto* out = new seanet_waveform;
  out->w = std::move(w);
  return out;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* seanet_status_name(seanet_status status) {
  switch (status) {
    case SEANET_OK: return "ok";
    case SEANET_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SEANET_ERR_IO: return "io";
    case SEANET_ERR_SHAPE: return "shape";
    case SEANET_ERR_CONFIG: return "config";
    case SEANET_ERR_MISSING_MODALITY: return "missing-modality";
    case SEANET_ERR_UNDEFINED_METRIC: return "undefined-metric";
    case SEANET_ERR_NON_FINITE_LOSS: return "non-finite-loss";
    case SEANET_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

const char* seanet_last_error(void) { return g_last_error.c_str(); }

const char* seanet_version(void) { return "0.1.0"; }

seanet_status seanet_waveform_create(const float* data, int64_t frames,
                                     int32_t channels, int32_t sample_rate_hz,
                                     seanet_waveform** out) {
  if (auto s = require(out && data && frames > 0 && channels > 0 &&
                           sample_rate_hz > 0,
                       "waveform_create: bad arguments"))
    return s;
  return guarded([&] {
    seanet::Waveform w(sample_rate_hz, channels, frames);
    for (int64_t i = 0; i < frames; ++i)
      for (int32_t c = 0; c < channels; ++c)
        w.ch(c)[static_cast<size_t>(i)] = data[i * channels + c];
    *out = wrap(std::move(w));
  });
}

void seanet_waveform_free(seanet_waveform* w) { delete w; }

int64_t seanet_waveform_length(const seanet_waveform* w) {
  return w ? w->w.length() : 0;
}

int32_t seanet_waveform_channels(const seanet_waveform* w) {
  return w ? w->w.num_channels() : 0;
}

int32_t seanet_waveform_sample_rate(const seanet_waveform* w) {
  return w ? w->w.sample_rate : 0;
}

seanet_status seanet_waveform_copy_channel(const seanet_waveform* w,
                                           int32_t channel, float* out,
                                           int64_t capacity) {
  if (auto s = require(w && out, "copy_channel: bad arguments")) return s;
  if (auto s = require(channel >= 0 && channel < w->w.num_channels(),
                       "copy_channel: channel out of range"))
    return s;
  if (auto s = require(capacity >= w->w.length(),
                       "copy_channel: buffer too small"))
    return s;
  std::memcpy(out, w->w.ch(channel).data(),
              sizeof(float) * static_cast<size_t>(w->w.length()));
  return SEANET_OK;
}

seanet_status seanet_wav_read(const char* path, seanet_waveform** out) {
  if (auto s = require(path && out, "wav_read: bad arguments")) return s;
  return guarded([&] { *out = wrap(seanet::read_wav(path)); });
}

seanet_status seanet_wav_write(const char* path, const seanet_waveform* w,
                               int write_float32) {
  if (auto s = require(path && w, "wav_write: bad arguments")) return s;
  return guarded([&] {
    seanet::write_wav(path, w->w,
                      write_float32 ? seanet::WavEncoding::kFloat32
                                    : seanet::WavEncoding::kPcm16);
  });
}

seanet_status seanet_high_pass(const seanet_waveform* w, double cutoff_hz,
                               seanet_waveform** out) {
  if (auto s = require(w && out, "high_pass: bad arguments")) return s;
  return guarded([&] { *out = wrap(seanet::high_pass(w->w, cutoff_hz)); });
}

seanet_status seanet_normalize(const seanet_waveform* w,
                               seanet_waveform** out) {
  if (auto s = require(w && out, "normalize: bad arguments")) return s;
  return guarded([&] { *out = wrap(seanet::normalize(w->w)); });
}

seanet_status seanet_resample(const seanet_waveform* w,
                              int32_t target_rate_hz, seanet_waveform** out) {
  if (auto s = require(w && out, "resample: bad arguments")) return s;
  return guarded([&] { *out = wrap(seanet::resample(w->w, target_rate_hz)); });
}

seanet_status seanet_band_limit(const seanet_waveform* w, int32_t factor,
                                seanet_waveform** out) {
  if (auto s = require(w && out, "band_limit: bad arguments")) return s;
  return guarded([&] { *out = wrap(seanet::band_limit(w->w, factor)); });
}

seanet_status seanet_mix(const seanet_waveform* clean,
                         const seanet_waveform* interferer, double gain_db,
                         uint64_t seed, seanet_waveform** out) {
  if (auto s = require(clean && interferer && out, "mix: bad arguments"))
    return s;
  return guarded([&] {
    seanet::Rng rng(seanet::mix_seed(seed, 0x6d6978 /* "mix" */));
    *out = wrap(seanet::mix(clean->w, interferer->w, gain_db, rng));
  });
}

seanet_status seanet_si_sdr(const seanet_waveform* estimate,
                            const seanet_waveform* reference,
                            double* out_db) {
  if (auto s = require(estimate && reference && out_db,
                       "si_sdr: bad arguments"))
    return s;
  return guarded([&] {
    *out_db = seanet::si_sdr_db(estimate->w.mono(), reference->w.mono());
  });
}

seanet_status seanet_si_sdri(const seanet_waveform* estimate,
                             const seanet_waveform* noisy,
                             const seanet_waveform* reference,
                             double* out_db) {
  if (auto s = require(estimate && noisy && reference && out_db,
                       "si_sdri: bad arguments"))
    return s;
  return guarded([&] {
    *out_db = seanet::si_sdri_db(estimate->w.mono(), noisy->w.mono(),
                                 reference->w.mono());
  });
}

seanet_status seanet_generator_load(const char* checkpoint_dir,
                                    seanet_generator** out) {
  if (auto s = require(checkpoint_dir && out, "generator_load: bad arguments"))
    return s;
  return guarded([&] {
    auto* g = new seanet_generator;
    g->g = seanet::load_generator(checkpoint_dir);
    *out = g;
  });
}

void seanet_generator_free(seanet_generator* g) { delete g; }

int64_t seanet_generator_parameter_count(const seanet_generator* g) {
  return g && g->g ? g->g->parameter_count() : 0;
}

seanet_status seanet_denoise(const seanet_generator* g,
                             const seanet_waveform* audio,
                             const seanet_waveform* accel,
                             int32_t decimation_factor,
                             seanet_waveform** out) {
  if (auto s = require(g && g->g && audio && out, "denoise: bad arguments"))
    return s;
  return guarded([&] {
    seanet::Waveform empty;
    *out = wrap(seanet::denoise_waveform(*g->g, audio->w,
                                         accel ? accel->w : empty,
                                         decimation_factor));
  });
}

seanet_status seanet_synthesize_accel(const seanet_generator* g,
                                      const seanet_waveform* clean,
                                      seanet_waveform** out) {
  if (auto s = require(g && g->g && clean && out,
                       "synthesize_accel: bad arguments"))
    return s;
  return guarded([&] {
    *out = wrap(seanet::synthesize_accelerometer(clean->w, *g->g));
  });
}

seanet_status seanet_run_make_mixtures(const char* config_json,
                                       char** out_report_json) {
  if (auto s = require(config_json && out_report_json,
                       "run_make_mixtures: bad arguments"))
    return s;
  return guarded([&] {
    *out_report_json = dup_string(
        seanet::run_make_mixtures(seanet::RunConfig::from_json(config_json)));
  });
}

seanet_status seanet_run_train(const char* config_json,
                               char** out_checkpoint_path) {
  if (auto s = require(config_json && out_checkpoint_path,
                       "run_train: bad arguments"))
    return s;
  return guarded([&] {
    *out_checkpoint_path = dup_string(
        seanet::run_train(seanet::RunConfig::from_json(config_json)));
  });
}

seanet_status seanet_run_train_accel_synth(const char* config_json,
                                           char** out_checkpoint_path) {
  if (auto s = require(config_json && out_checkpoint_path,
                       "run_train_accel_synth: bad arguments"))
    return s;
  return guarded([&] {
    *out_checkpoint_path = dup_string(seanet::run_train_accel_synth(
        seanet::RunConfig::from_json(config_json)));
  });
}

seanet_status seanet_run_evaluate(const char* config_json,
                                  char** out_result_json) {
  if (auto s = require(config_json && out_result_json,
                       "run_evaluate: bad arguments"))
    return s;
  return guarded([&] {
    *out_result_json = dup_string(
        seanet::run_evaluate(seanet::RunConfig::from_json(config_json)));
  });
}

seanet_status seanet_run_denoise(const char* config_json) {
  if (auto s = require(config_json != nullptr, "run_denoise: bad arguments"))
    return s;
  return guarded(
      [&] { seanet::run_denoise(seanet::RunConfig::from_json(config_json)); });
}

void seanet_string_free(char* s) { std::free(s); }

}  // extern "C"
