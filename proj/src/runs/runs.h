// src/runs/runs.h

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

#ifndef SEANET_RUNS_RUNS_H_
#define SEANET_RUNS_RUNS_H_

#include <string>

#include "runs/config.h"

namespace seanet {

// End-to-end command implementations. Each writes the resolved config
// snapshot into cfg.out_dir and never mutates its inputs.

// Materializes noisy/clean/accel WAV triples plus a derived manifest.
// Returns a small JSON report ({"out_dir", "count", "manifest"}).
std::string run_make_mixtures(const RunConfig& cfg);

// Returns the final checkpoint path.
std::string run_train(const RunConfig& cfg);
std::string run_train_accel_synth(const RunConfig& cfg);

// Returns the EvalResult JSON (or a {"sweep": [...]} document).
std::string run_evaluate(const RunConfig& cfg);

// Writes the denoised WAV to cfg.out_wav.
void run_denoise(const RunConfig& cfg);

}  // namespace seanet

#endif  // SEANET_RUNS_RUNS_H_
