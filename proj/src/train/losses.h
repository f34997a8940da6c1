// src/train/losses.h

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

#ifndef SEANET_TRAIN_LOSSES_H_
#define SEANET_TRAIN_LOSSES_H_

#include "model/discriminator.h"
#include "nn/ops.h"

namespace seanet {

struct LossReport {
  double d_loss = 0.0;
  double g_adv_loss = 0.0;
  double g_rec_loss = 0.0;
  double g_total = 0.0;
  double lambda = 100.0;
};

// Hinge loss over both branches, averaged over scales and time:
// (1/K) sum_k mean_t max(0, 1 - D_k(y)) + (1/K) sum_k mean_t max(0, 1 + D_k(G)).
nn::Tensor discriminator_loss(nn::Tape& tape, const DiscriminatorOutput& real,
                              const DiscriminatorOutput& fake);

// (1/K) sum_k mean_t max(0, 1 - D_k(G)); hinge form on the generator side.
nn::Tensor generator_adversarial_loss(nn::Tape& tape,
                                      const DiscriminatorOutput& fake);

// (1/K) sum_k (1/L) sum_l mean |D_k^l(y) - D_k^l(G)|; the per-layer term is
// normalized by the layer's full element count (time x channels).
nn::Tensor feature_matching_loss(nn::Tape& tape,
                                 const DiscriminatorOutput& real,
                                 const DiscriminatorOutput& fake);

// adv + lambda * rec.
nn::Tensor generator_total_loss(nn::Tape& tape, const nn::Tensor& adv,
                                const nn::Tensor& rec, float lambda);

}  // namespace seanet

#endif  // SEANET_TRAIN_LOSSES_H_
