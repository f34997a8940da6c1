// src/runs/runs.cpp

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

#include "runs/runs.h"

#include <filesystem>
#include <fstream>
#include <memory>

#include "common/error.h"
#include "data/batcher.h"
#include "data/manifest.h"
#include "data/pipeline.h"
#include "eval/evaluate.h"
#include "json.hpp"
#include "model/checkpoint.h"
#include "signal/wav_io.h"
#include "train/trainer.h"

namespace seanet {

namespace fs = std::filesystem;

namespace {

void write_snapshot(const std::string& dir, const RunConfig& cfg) {
  fs::create_directories(dir);
  std::ofstream os(dir + "/config.json", std::ios::trunc);
  SEANET_CHECK(os.good(), ErrorCategory::kIo,
               "cannot write config snapshot in " + dir);
  os << cfg.to_json() << "\n";
}

DatasetManifest load_manifest(const RunConfig& cfg) {
  SEANET_CHECK(!cfg.manifest.empty(), ErrorCategory::kConfig,
               "a manifest path is required");
  return read_manifest(cfg.manifest, cfg.noise_list,
                       parse_scenario(cfg.scenario), cfg.mix_gain_db);
}

DataConfig data_config(const RunConfig& cfg, int accel_channels,
                       bool accel_synth_mode, int crop_length) {
  DataConfig d;
  d.crop_length = crop_length;
  d.accel_channels = accel_channels;
  d.accel_axis = cfg.accel_axis;
  d.accel_synth_mode = accel_synth_mode;
  d.synth_checkpoint = cfg.synth_checkpoint;
  return d;
}

TrainConfig train_config(const RunConfig& cfg) {
  TrainConfig t;
  t.batch_size = cfg.batch_size;
  t.learning_rate = static_cast<float>(cfg.learning_rate);
  t.beta1 = static_cast<float>(cfg.beta1);
  t.beta2 = static_cast<float>(cfg.beta2);
  t.total_steps = cfg.total_steps;
  t.lambda = static_cast<float>(cfg.lambda);
  t.seed = cfg.seed;
  t.checkpoint_every = cfg.checkpoint_every;
  t.crop_length = cfg.crop_length;
  t.num_workers = cfg.num_workers;
  return t;
}

std::string fit_with_optional_resume(Trainer& trainer, const RunConfig& cfg,
                                     std::shared_ptr<const ExampleFactory> f,
                                     BatchMode mode) {
  if (cfg.resume) {
    auto latest = latest_checkpoint(cfg.out_dir + "/ckpt");
    if (latest) trainer.resume_from(*latest);
  }
  return trainer.fit(std::move(f), mode);
}

}  // namespace

std::string run_make_mixtures(const RunConfig& cfg) {
  DatasetManifest manifest = load_manifest(cfg);
  write_snapshot(cfg.out_dir, cfg);
  ExampleFactory factory(manifest,
                         data_config(cfg, cfg.accel_channels, false, 0));

  std::vector<ManifestEntry> derived;
  int64_t count = 0;
  for (int64_t i = 0; i < factory.size(); ++i) {
    const ManifestEntry& src = manifest.entries[static_cast<size_t>(i)];
    for (int r = 0; r < cfg.mixtures_per_entry; ++r) {
      TrainingExample ex = factory.make_full(
          i, mix_seed(cfg.seed, static_cast<uint64_t>(i),
                      static_cast<uint64_t>(r)));
      const std::string base = cfg.out_dir + "/mix_" + src.speaker_id + "_" +
                               std::to_string(i) + "_" + std::to_string(r);
      write_wav(base + "_noisy.wav", ex.x_m);
      write_wav(base + "_clean.wav", ex.y_m);
      ManifestEntry out_entry;
      out_entry.clean_path = base + "_clean.wav";
      out_entry.speaker_id = src.speaker_id;
      if (ex.x_a.num_channels() > 0) {
        write_wav(base + "_accel.wav", ex.x_a);
        out_entry.accel_path = base + "_accel.wav";
      }
      derived.push_back(std::move(out_entry));
      ++count;
    }
  }
  const std::string derived_path = cfg.out_dir + "/mixtures.jsonl";
  write_manifest_jsonl(derived_path, derived);

  nlohmann::json report;
  report["out_dir"] = cfg.out_dir;
  report["count"] = count;
  report["manifest"] = derived_path;
  return report.dump(2);
}

std::string run_train(const RunConfig& cfg) {
  DatasetManifest manifest = load_manifest(cfg);
  write_snapshot(cfg.out_dir, cfg);

  GeneratorSpec gen_spec;
  gen_spec.base_channels = cfg.base_channels;
  gen_spec.accel_channels = cfg.audio_only ? 0 : cfg.accel_channels;
  DiscriminatorSpec disc_spec;
  disc_spec.base_channels = cfg.disc_base_channels;
  disc_spec.max_channels = cfg.disc_max_channels;

  auto factory = std::make_shared<const ExampleFactory>(
      manifest, data_config(cfg, gen_spec.accel_channels, false,
                            cfg.crop_length));
  Trainer trainer(gen_spec, disc_spec, train_config(cfg), cfg.out_dir,
                  cfg.to_json());
  return fit_with_optional_resume(trainer, cfg, factory, BatchMode::kDenoise);
}

std::string run_train_accel_synth(const RunConfig& cfg) {
  DatasetManifest manifest = load_manifest(cfg);
  write_snapshot(cfg.out_dir, cfg);

  // Same architecture, one clean-audio channel in, one accelerometer-domain
  // channel out.
  GeneratorSpec gen_spec;
  gen_spec.base_channels = cfg.base_channels;
  gen_spec.accel_channels = 0;
  DiscriminatorSpec disc_spec;
  disc_spec.base_channels = cfg.disc_base_channels;
  disc_spec.max_channels = cfg.disc_max_channels;

  auto factory = std::make_shared<const ExampleFactory>(
      manifest, data_config(cfg, 1, true, cfg.crop_length));
  Trainer trainer(gen_spec, disc_spec, train_config(cfg), cfg.out_dir,
                  cfg.to_json());
  return fit_with_optional_resume(trainer, cfg, factory,
                                  BatchMode::kAccelSynth);
}

std::string run_evaluate(const RunConfig& cfg) {
  SEANET_CHECK(!cfg.checkpoint.empty(), ErrorCategory::kConfig,
               "evaluate needs a checkpoint directory");
  std::unique_ptr<Generator> gen = load_generator(cfg.checkpoint);
  DatasetManifest manifest = load_manifest(cfg);
  write_snapshot(cfg.out_dir, cfg);

  ExampleFactory factory(
      manifest, data_config(cfg, gen->spec().accel_channels, false, 0));

  EvalOptions opts;
  opts.seed = cfg.seed;
  opts.zero_accel = cfg.zero_accel;

  if (!cfg.decimation_sweep) {
    opts.decimation_factor = cfg.decimation_factor;
    EvalResult r = evaluate_corpus(*gen, factory, opts);
    write_eval_csv(cfg.out_dir + "/eval.csv", r);
    write_eval_json(cfg.out_dir + "/eval.json", r);
    return eval_result_to_json(r);
  }

  const std::vector<int> factors{1, 16, 20, 32, 40, 50, 64, 80, 100};
  std::vector<EvalResult> results;
  for (int f : factors) {
    opts.decimation_factor = f;
    EvalResult r = evaluate_corpus(*gen, factory, opts);
    const std::string tag = "factor-" + std::to_string(f);
    write_eval_csv(cfg.out_dir + "/eval_" + tag + ".csv", r);
    write_eval_json(cfg.out_dir + "/eval_" + tag + ".json", r);
    results.push_back(std::move(r));
  }
  write_sweep_csv(cfg.out_dir + "/sweep.csv", results);
  if (cfg.emit_plot) write_sweep_svg(cfg.out_dir + "/sweep.svg", results);

  nlohmann::json j;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results)
    arr.push_back(nlohmann::json::parse(eval_result_to_json(r)));
  j["sweep"] = arr;
  return j.dump(2);
}

void run_denoise(const RunConfig& cfg) {
  SEANET_CHECK(!cfg.checkpoint.empty(), ErrorCategory::kConfig,
               "denoise needs a checkpoint directory");
  SEANET_CHECK(!cfg.in_audio.empty() && !cfg.out_wav.empty(),
               ErrorCategory::kConfig, "denoise needs in_audio and out_wav");
  std::unique_ptr<Generator> gen = load_generator(cfg.checkpoint);

  Waveform audio = read_wav(cfg.in_audio);
  Waveform accel;
  if (gen->spec().accel_channels > 0) {
    SEANET_CHECK(!cfg.in_accel.empty(), ErrorCategory::kMissingModality,
                 "this checkpoint requires an accelerometer wav (in_accel)");
    accel = read_wav(cfg.in_accel);
    if (cfg.accel_axis > 0 || accel.num_channels() > gen->spec().accel_channels) {
      Waveform axes;
      axes.sample_rate = accel.sample_rate;
      SEANET_CHECK(
          cfg.accel_axis + gen->spec().accel_channels <= accel.num_channels(),
          ErrorCategory::kInvalidArgument, "accel axis out of range");
      for (int c = 0; c < gen->spec().accel_channels; ++c)
        axes.channels.push_back(accel.ch(cfg.accel_axis + c));
      accel = std::move(axes);
    }
  }
  Waveform out =
      denoise_waveform(*gen, audio, accel, cfg.decimation_factor);
  write_wav(cfg.out_wav, out);

  std::ofstream snap(cfg.out_wav + ".run.json", std::ios::trunc);
  if (snap.good()) snap << cfg.to_json() << "\n";
}

}  // namespace seanet
