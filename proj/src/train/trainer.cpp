// src/train/trainer.cpp

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

#include "train/trainer.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "common/error.h"

namespace seanet {

namespace fs = std::filesystem;

Trainer::Trainer(const GeneratorSpec& gen_spec,
                 const DiscriminatorSpec& disc_spec, const TrainConfig& cfg,
                 std::string out_dir, std::string config_snapshot_json)
    : cfg_(cfg),
      out_dir_(std::move(out_dir)),
      config_snapshot_(std::move(config_snapshot_json)) {
  SEANET_CHECK(cfg_.total_steps >= 1, ErrorCategory::kConfig,
               "total_steps must be >= 1");
  SEANET_CHECK(cfg_.batch_size >= 1, ErrorCategory::kConfig,
               "batch_size must be >= 1");
  gen_ = std::make_unique<Generator>(gen_spec, cfg_.seed);
  disc_ = std::make_unique<MultiScaleDiscriminator>(disc_spec, cfg_.seed);
  const nn::AdamConfig adam{cfg_.learning_rate, cfg_.beta1, cfg_.beta2, 1e-8f};
  opt_g_ = std::make_unique<nn::Adam>(&gen_->params(), adam);
  opt_d_ = std::make_unique<nn::Adam>(&disc_->params(), adam);
  fs::create_directories(out_dir_);
}

void Trainer::resume_from(const std::string& checkpoint_dir) {
  LoadedCheckpoint ckpt = load_checkpoint(checkpoint_dir);
  SEANET_CHECK(ckpt.gen_spec.to_json() == gen_->spec().to_json() &&
                   ckpt.disc_spec.to_json() == disc_->spec().to_json(),
               ErrorCategory::kConfig,
               "checkpoint specs do not match the configured model");
  gen_->load_tensors(ckpt.generator);
  disc_->load_tensors(ckpt.discriminator);
  opt_g_->load_state(ckpt.opt_g);
  opt_d_->load_state(ckpt.opt_d);
  step_ = ckpt.meta.step;
}

void Trainer::check_finite(double v, const char* component,
                           const nn::Tensor& probe) {
  if (std::isfinite(v)) return;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "non-finite %s at step %lld (max |activation| = %.6g)",
                component, static_cast<long long>(step_ + 1),
                static_cast<double>(nn::max_abs(probe)));
  fail(ErrorCategory::kNonFiniteLoss, buf);
}

LossReport Trainer::train_step(const Batch& batch) {
  // Generator forward once; the tape is replayed for the generator update
  // after the discriminator has taken its step.
  nn::Tape tape_g;
  Generator::Forward fwd =
      gen_->forward(tape_g, batch.audio_in, batch.accel_in, true);
  nn::Tensor fake = fwd.out;

  // Discriminator update on (real, detached fake).
  nn::Tape tape_d;
  DiscriminatorOutput real_out = disc_->forward(tape_d, batch.target, true);
  DiscriminatorOutput fake_out =
      disc_->forward(tape_d, fake.detached(), true);
  nn::Tensor d_loss = discriminator_loss(tape_d, real_out, fake_out);
  check_finite(d_loss.item(), "d_loss", fake);
  opt_d_->zero_grad();
  tape_d.backward(d_loss);
  opt_d_->step();

  // Generator update against the updated discriminator. Parameters of the
  // discriminator stay frozen here; only input gradients flow.
  nn::Tape tape_adv;
  DiscriminatorOutput real_ref = disc_->forward(tape_adv, batch.target, false);
  DiscriminatorOutput fake_adv = disc_->forward(tape_adv, fake, false);
  nn::Tensor g_adv = generator_adversarial_loss(tape_adv, fake_adv);
  nn::Tensor g_rec = feature_matching_loss(tape_adv, real_ref, fake_adv);
  nn::Tensor g_total = generator_total_loss(tape_adv, g_adv, g_rec, cfg_.lambda);
  check_finite(g_adv.item(), "g_adv", fake);
  check_finite(g_rec.item(), "g_rec", fake);
  opt_g_->zero_grad();
  tape_adv.backward(g_total);  // deposits d(loss)/d(fake)
  tape_g.run_reverse();        // continues into generator parameters
  opt_g_->step();

  ++step_;
  LossReport rep;
  rep.d_loss = d_loss.item();
  rep.g_adv_loss = g_adv.item();
  rep.g_rec_loss = g_rec.item();
  rep.g_total = g_total.item();
  rep.lambda = cfg_.lambda;
  return rep;
}

std::string Trainer::save_checkpoint_now() {
  const std::string dir =
      out_dir_ + "/ckpt/step-" + std::to_string(step_);
  fs::create_directories(out_dir_ + "/ckpt");
  CheckpointMeta meta;
  meta.step = step_;
  meta.seed = cfg_.seed;
  save_checkpoint(dir, *gen_, *disc_, *opt_g_, *opt_d_, meta,
                  config_snapshot_);
  return dir;
}

std::string Trainer::fit(std::shared_ptr<const ExampleFactory> factory,
                         BatchMode mode) {
  BatchIterator it(factory, mode, cfg_.batch_size, cfg_.seed, step_,
                   cfg_.num_workers);

  const std::string log_path = out_dir_ + "/train_log.csv";
  const bool fresh = !fs::exists(log_path) || fs::file_size(log_path) == 0;
  std::ofstream log(log_path, std::ios::app);
  SEANET_CHECK(log.good(), ErrorCategory::kIo, "cannot open " + log_path);
  if (fresh) log << "step,d_loss,g_adv,g_rec,g_total\n";

  std::string last_ckpt;
  while (step_ < cfg_.total_steps) {
    Batch batch = it.next();
    LossReport rep = train_step(batch);
    char row[192];
    std::snprintf(row, sizeof(row), "%lld,%.9g,%.9g,%.9g,%.9g\n",
                  static_cast<long long>(step_), rep.d_loss, rep.g_adv_loss,
                  rep.g_rec_loss, rep.g_total);
    log << row;
    log.flush();
    if (cfg_.checkpoint_every > 0 && step_ % cfg_.checkpoint_every == 0)
      last_ckpt = save_checkpoint_now();
  }
  if (last_ckpt.empty() ||
      step_ % std::max<int64_t>(cfg_.checkpoint_every, 1) != 0)
    last_ckpt = save_checkpoint_now();
  return last_ckpt;
}

}  // namespace seanet
