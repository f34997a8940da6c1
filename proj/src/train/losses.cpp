// src/train/losses.cpp

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

#include "train/losses.h"

#include "common/error.h"

namespace seanet {

nn::Tensor discriminator_loss(nn::Tape& tape, const DiscriminatorOutput& real,
                              const DiscriminatorOutput& fake) {
  const size_t K = real.logits.size();
  SEANET_CHECK(K > 0 && fake.logits.size() == K, ErrorCategory::kShape,
               "discriminator_loss: scale count mismatch");
  std::vector<std::pair<float, nn::Tensor>> terms;
  const float inv_k = 1.0f / static_cast<float>(K);
  for (size_t k = 0; k < K; ++k) {
    terms.emplace_back(inv_k, nn::hinge_mean(tape, real.logits[k], +1.0f));
    terms.emplace_back(inv_k, nn::hinge_mean(tape, fake.logits[k], -1.0f));
  }
  return nn::scalar_comb(tape, terms);
}

nn::Tensor generator_adversarial_loss(nn::Tape& tape,
                                      const DiscriminatorOutput& fake) {
  const size_t K = fake.logits.size();
  SEANET_CHECK(K > 0, ErrorCategory::kShape,
               "generator_adversarial_loss: no scales");
  std::vector<std::pair<float, nn::Tensor>> terms;
  const float inv_k = 1.0f / static_cast<float>(K);
  for (size_t k = 0; k < K; ++k)
    terms.emplace_back(inv_k, nn::hinge_mean(tape, fake.logits[k], +1.0f));
  return nn::scalar_comb(tape, terms);
}

nn::Tensor feature_matching_loss(nn::Tape& tape,
                                 const DiscriminatorOutput& real,
                                 const DiscriminatorOutput& fake) {
  const size_t K = real.features.size();
  SEANET_CHECK(K > 0 && fake.features.size() == K, ErrorCategory::kShape,
               "feature_matching_loss: scale count mismatch");
  std::vector<std::pair<float, nn::Tensor>> terms;
  for (size_t k = 0; k < K; ++k) {
    const size_t L = real.features[k].size();
    SEANET_CHECK(L > 0 && fake.features[k].size() == L, ErrorCategory::kShape,
                 "feature_matching_loss: layer count mismatch");
    const float coeff = 1.0f / static_cast<float>(K * L);
    for (size_t l = 0; l < L; ++l)
      terms.emplace_back(coeff, nn::mean_abs_diff(tape, real.features[k][l],
                                                  fake.features[k][l]));
  }
  return nn::scalar_comb(tape, terms);
}

nn::Tensor generator_total_loss(nn::Tape& tape, const nn::Tensor& adv,
                                const nn::Tensor& rec, float lambda) {
  SEANET_CHECK(lambda >= 0.0f, ErrorCategory::kInvalidArgument,
               "generator_total_loss: lambda must be >= 0");
  return nn::scalar_comb(tape, {{1.0f, adv}, {lambda, rec}});
}

}  // namespace seanet
