// src/eval/metrics.cpp

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

#include "eval/metrics.h"

#include <cmath>

#include "common/error.h"

namespace seanet {

namespace {
constexpr double kResidualEps = 1e-8;
constexpr double kCapDb = 100.0;
constexpr double kSilenceEnergy = 1e-16;
}  // namespace

double si_sdr_db(const std::vector<float>& estimate,
                 const std::vector<float>& reference) {
  SEANET_CHECK(estimate.size() == reference.size(),
               ErrorCategory::kInvalidArgument,
               "si_sdr: length mismatch (" + std::to_string(estimate.size()) +
                   " vs " + std::to_string(reference.size()) + ")");
  SEANET_CHECK(!reference.empty(), ErrorCategory::kInvalidArgument,
               "si_sdr: empty signals");

  double dot = 0.0, ref_energy = 0.0, est_energy = 0.0;
  for (size_t i = 0; i < reference.size(); ++i) {
    dot += double(estimate[i]) * reference[i];
    ref_energy += double(reference[i]) * reference[i];
    est_energy += double(estimate[i]) * estimate[i];
  }
  SEANET_CHECK(ref_energy > kSilenceEnergy, ErrorCategory::kUndefinedMetric,
               "si_sdr: silent reference");
  SEANET_CHECK(est_energy > kSilenceEnergy, ErrorCategory::kUndefinedMetric,
               "si_sdr: silent estimate");

  const double alpha = dot / ref_energy;
  const double target_energy = alpha * alpha * ref_energy;
  double resid_energy = 0.0;
  for (size_t i = 0; i < reference.size(); ++i) {
    const double r = double(estimate[i]) - alpha * reference[i];
    resid_energy += r * r;
  }
  if (target_energy <= 0.0) return -kCapDb;
  if (resid_energy == 0.0) return kCapDb;  // perfect reconstruction
  const double val = 10.0 * std::log10(target_energy /
                                       (resid_energy + kResidualEps));
  if (val > kCapDb) return kCapDb;
  if (val < -kCapDb) return -kCapDb;
  return val;
}

double si_sdri_db(const std::vector<float>& estimate,
                  const std::vector<float>& noisy,
                  const std::vector<float>& reference) {
  return si_sdr_db(estimate, reference) - si_sdr_db(noisy, reference);
}

}  // namespace seanet
