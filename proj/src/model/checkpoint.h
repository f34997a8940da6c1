// src/model/checkpoint.h

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

#ifndef SEANET_MODEL_CHECKPOINT_H_
#define SEANET_MODEL_CHECKPOINT_H_

#include <memory>
#include <optional>
#include <string>

#include "model/discriminator.h"
#include "model/generator.h"
#include "nn/adam.h"

namespace seanet {

// Checkpoint directory layout (self-describing):
//   <dir>/spec.json            generator + discriminator hyperparameters
//   <dir>/generator.tensors
//   <dir>/discriminator.tensors
//   <dir>/opt_g.tensors, opt_d.tensors
//   <dir>/state.json           step counter and seed
//   <dir>/config.json          training config snapshot
// Writes go to "<dir>.tmp" and are renamed into place.
struct CheckpointMeta {
  int64_t step = 0;
  uint64_t seed = 0;
};

void save_checkpoint(const std::string& dir, const Generator& gen,
                     const MultiScaleDiscriminator& disc, const nn::Adam& opt_g,
                     const nn::Adam& opt_d, const CheckpointMeta& meta,
                     const std::string& config_json);

struct LoadedCheckpoint {
  GeneratorSpec gen_spec;
  DiscriminatorSpec disc_spec;
  CheckpointMeta meta;
  std::string config_json;
  std::map<std::string, nn::Tensor> generator;
  std::map<std::string, nn::Tensor> discriminator;
  std::map<std::string, nn::Tensor> opt_g;
  std::map<std::string, nn::Tensor> opt_d;
};

LoadedCheckpoint load_checkpoint(const std::string& dir);

// Inference-only load: spec.json + generator.tensors are enough.
std::unique_ptr<Generator> load_generator(const std::string& dir);

// Highest step-<N> directory under a checkpoint root, if any.
std::optional<std::string> latest_checkpoint(const std::string& root);

}  // namespace seanet

#endif  // SEANET_MODEL_CHECKPOINT_H_
