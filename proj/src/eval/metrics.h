// src/eval/metrics.h

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

#ifndef SEANET_EVAL_METRICS_H_
#define SEANET_EVAL_METRICS_H_

#include <vector>

namespace seanet {

// Scale-invariant signal-to-distortion ratio in dB:
//   alpha = <e, r> / ||r||^2
//   SI-SDR = 10 log10(||alpha r||^2 / (||e - alpha r||^2 + 1e-8))
// capped to [-100, +100] dB so perfect reconstructions stay finite in logs.
// Signals are used as-is (no mean subtraction). Errors on length mismatch
// or a silent reference/estimate.
double si_sdr_db(const std::vector<float>& estimate,
                 const std::vector<float>& reference);

// si_sdr(estimate, reference) - si_sdr(noisy, reference).
double si_sdri_db(const std::vector<float>& estimate,
                  const std::vector<float>& noisy,
                  const std::vector<float>& reference);

}  // namespace seanet

#endif  // SEANET_EVAL_METRICS_H_
