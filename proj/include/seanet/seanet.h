/* include/seanet/seanet.h */

/* Copyright 2026  SEANet C++ project */

/* Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
 * KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
 * WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
 * MERCHANTABLITY OR NON-INFRINGEMENT.
 * See the Apache 2 License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the SEANet speech-enhancement library. All functions
 * return a status code; on failure seanet_last_error() carries a message
 * for the calling thread. Objects are opaque handles released with the
 * matching *_free function. The library is usable from plain C. */

#ifndef SEANET_SEANET_H_
#define SEANET_SEANET_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum seanet_status {
  SEANET_OK = 0,
  SEANET_ERR_INVALID_ARGUMENT = 1,
  SEANET_ERR_IO = 2,
  SEANET_ERR_SHAPE = 3,
  SEANET_ERR_CONFIG = 4,
  SEANET_ERR_MISSING_MODALITY = 5,
  SEANET_ERR_UNDEFINED_METRIC = 6,
  SEANET_ERR_NON_FINITE_LOSS = 7,
  SEANET_ERR_INTERNAL = 8
} seanet_status;

/* Stable machine-parsable name of a status ("invalid-argument", ...). */
const char* seanet_status_name(seanet_status status);

/* Message from the most recent failing call on this thread. */
const char* seanet_last_error(void);

const char* seanet_version(void);

/* ---- waveforms ------------------------------------------------------- */

typedef struct seanet_waveform seanet_waveform;

/* data is interleaved frame-major: frame i channel c at data[i*channels+c]. */
seanet_status seanet_waveform_create(const float* data, int64_t frames,
                                     int32_t channels, int32_t sample_rate_hz,
                                     seanet_waveform** out);
void seanet_waveform_free(seanet_waveform* w);

int64_t seanet_waveform_length(const seanet_waveform* w);
int32_t seanet_waveform_channels(const seanet_waveform* w);
int32_t seanet_waveform_sample_rate(const seanet_waveform* w);
/* Copies one channel into out[0..length). */
seanet_status seanet_waveform_copy_channel(const seanet_waveform* w,
                                           int32_t channel, float* out,
                                           int64_t capacity);

/* 16-bit PCM or 32-bit float RIFF/WAVE. */
seanet_status seanet_wav_read(const char* path, seanet_waveform** out);
seanet_status seanet_wav_write(const char* path, const seanet_waveform* w,
                               int write_float32);

/* ---- signal operations ----------------------------------------------- */

/* Zero-phase 2nd-order Butterworth high-pass. */
seanet_status seanet_high_pass(const seanet_waveform* w, double cutoff_hz,
                               seanet_waveform** out);
/* x / (1.1 * quantile(|x|, 0.9999)), clipped to [-1, 1]. */
seanet_status seanet_normalize(const seanet_waveform* w,
                               seanet_waveform** out);
/* Band-limited rational-ratio resampling. */
seanet_status seanet_resample(const seanet_waveform* w,
                              int32_t target_rate_hz, seanet_waveform** out);
/* Anti-alias + decimate by factor + re-interpolate; length preserved. */
seanet_status seanet_band_limit(const seanet_waveform* w, int32_t factor,
                                seanet_waveform** out);
/* clean + 10^(gain_db/20) * interferer, cropped/tiled to the clean length
 * at a seed-derived offset. No clipping. */
seanet_status seanet_mix(const seanet_waveform* clean,
                         const seanet_waveform* interferer, double gain_db,
                         uint64_t seed, seanet_waveform** out);

/* ---- metrics ---------------------------------------------------------- */

/* Scale-invariant SDR in dB (mono inputs of equal length). */
seanet_status seanet_si_sdr(const seanet_waveform* estimate,
                            const seanet_waveform* reference, double* out_db);
/* si_sdr(estimate, reference) - si_sdr(noisy, reference). */
seanet_status seanet_si_sdri(const seanet_waveform* estimate,
                             const seanet_waveform* noisy,
                             const seanet_waveform* reference,
                             double* out_db);

/* ---- models ----------------------------------------------------------- */

typedef struct seanet_generator seanet_generator;

/* Loads spec.json + generator.tensors from a checkpoint directory. */
seanet_status seanet_generator_load(const char* checkpoint_dir,
                                    seanet_generator** out);
void seanet_generator_free(seanet_generator* g);
int64_t seanet_generator_parameter_count(const seanet_generator* g);

/* Denoises one utterance. Applies the training-time preprocessing
 * (high-pass, normalize, accelerometer resampling); accel may be NULL for
 * audio-only checkpoints. */
seanet_status seanet_denoise(const seanet_generator* g,
                             const seanet_waveform* audio,
                             const seanet_waveform* accel,
                             int32_t decimation_factor,
                             seanet_waveform** out);

/* Maps clean audio to a synthetic accelerometer waveform with a
 * 1-in/1-out generator. */
seanet_status seanet_synthesize_accel(const seanet_generator* g,
                                      const seanet_waveform* clean,
                                      seanet_waveform** out);

/* ---- config-driven runs ----------------------------------------------- */
/* config_json follows the documented run-config schema (see README). The
 * returned string must be released with seanet_string_free. */

seanet_status seanet_run_make_mixtures(const char* config_json,
                                       char** out_report_json);
seanet_status seanet_run_train(const char* config_json,
                               char** out_checkpoint_path);
seanet_status seanet_run_train_accel_synth(const char* config_json,
                                           char** out_checkpoint_path);
seanet_status seanet_run_evaluate(const char* config_json,
                                  char** out_result_json);
seanet_status seanet_run_denoise(const char* config_json);

void seanet_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SEANET_SEANET_H_ */
