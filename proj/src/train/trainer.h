// src/train/trainer.h

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

#ifndef SEANET_TRAIN_TRAINER_H_
#define SEANET_TRAIN_TRAINER_H_

#include <memory>
#include <string>

#include "data/batcher.h"
#include "model/checkpoint.h"
#include "model/discriminator.h"
#include "model/generator.h"
#include "nn/adam.h"
#include "train/losses.h"

namespace seanet {

struct TrainConfig {
  int batch_size = 16;
  float learning_rate = 1e-4f;  // constant, no schedule
  float beta1 = 0.5f;
  float beta2 = 0.9f;
  int64_t total_steps = 200000;  // 2M for Librispeech-scale runs
  float lambda = 100.0f;
  uint64_t seed = 1;
  int64_t checkpoint_every = 10000;
  int crop_length = 16384;
  int num_workers = 1;
};

// Alternating adversarial optimization: per batch one discriminator update
// (hinge loss) followed by one generator update (hinge + weighted feature
// loss) on the same batch against the freshly updated discriminator.
class Trainer {
 public:
  Trainer(const GeneratorSpec& gen_spec, const DiscriminatorSpec& disc_spec,
          const TrainConfig& cfg, std::string out_dir,
          std::string config_snapshot_json = "{}");

  // Restores parameters, optimizer moments and the step counter; training
  // continues bit-identically to an uninterrupted run.
  void resume_from(const std::string& checkpoint_dir);

  LossReport train_step(const Batch& batch);

  // Runs to total_steps, logging one CSV row per step and checkpointing
  // every checkpoint_every steps plus at the end. Returns the final
  // checkpoint path (evaluation always uses the last checkpoint).
  std::string fit(std::shared_ptr<const ExampleFactory> factory,
                  BatchMode mode);

  int64_t step() const { return step_; }
  Generator& generator() { return *gen_; }
  MultiScaleDiscriminator& discriminator() { return *disc_; }
  const TrainConfig& config() const { return cfg_; }

  std::string save_checkpoint_now();

 private:
  void check_finite(double v, const char* component, const nn::Tensor& probe);

  TrainConfig cfg_;
  std::string out_dir_;
  std::string config_snapshot_;
  std::unique_ptr<Generator> gen_;
  std::unique_ptr<MultiScaleDiscriminator> disc_;
  std::unique_ptr<nn::Adam> opt_g_;
  std::unique_ptr<nn::Adam> opt_d_;
  int64_t step_ = 0;
};

}  // namespace seanet

#endif  // SEANET_TRAIN_TRAINER_H_
