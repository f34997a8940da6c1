// src/eval/evaluate.h

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

#ifndef SEANET_EVAL_EVALUATE_H_
#define SEANET_EVAL_EVALUATE_H_

#include <string>
#include <vector>

#include "data/pipeline.h"
#include "model/generator.h"

namespace seanet {

struct EvalExample {
  std::string example_id;
  double si_sdr_in = 0.0;
  double si_sdr_out = 0.0;
  double si_sdri = 0.0;
  bool excluded = false;  // silent reference, left out of the aggregate
};

struct EvalResult {
  std::vector<EvalExample> per_example;
  double mean_si_sdri = 0.0;
  double std_si_sdri = 0.0;
  std::string scenario;
  int decimation_factor = 1;  // 1 = full bandwidth
  int simulated_rate_hz = 0;
  int included = 0;
  int excluded = 0;
};

struct EvalOptions {
  uint64_t seed = 1;
  int decimation_factor = 1;
  bool zero_accel = false;  // diagnostic: feed zeros instead of the accel
};

// Full-utterance evaluation: build each mixture, band-limit the
// conditioning, run the generator (padded to the stride, trimmed after) and
// aggregate SI-SDRi. References quieter than RMS 1e-5 are flagged and
// excluded from the aggregate.
EvalResult evaluate_corpus(const Generator& gen, const ExampleFactory& factory,
                           const EvalOptions& opts);

// Denoise one utterance with the training-time preprocessing applied.
Waveform denoise_waveform(const Generator& gen, const Waveform& audio,
                          const Waveform& accel, int decimation_factor = 1,
                          double high_pass_hz = 20.0);

void write_eval_csv(const std::string& path, const EvalResult& r);
void write_eval_json(const std::string& path, const EvalResult& r);
std::string eval_result_to_json(const EvalResult& r);

// Mean SI-SDRi vs simulated accelerometer rate, one point per factor.
void write_sweep_csv(const std::string& path,
                     const std::vector<EvalResult>& results);
void write_sweep_svg(const std::string& path,
                     const std::vector<EvalResult>& results);

}  // namespace seanet

#endif  // SEANET_EVAL_EVALUATE_H_
