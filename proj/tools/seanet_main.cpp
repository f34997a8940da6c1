// tools/seanet_main.cpp

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

// Command-line front end. Builds one resolved run-config JSON document
// (precedence: config file < SEANET_* environment < flags) and drives the
// shared library through its C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seanet/seanet.h"

namespace {

using nlohmann::json;

enum class KeyType { kString, kInt, kFloat, kBool };

struct KeySpec {
  const char* key;   // config field
  const char* flag;  // long-form CLI flag
  KeyType type;
  const char* help;
};

const std::vector<KeySpec>& key_table() {
  static const std::vector<KeySpec> table = {
      {"manifest", "--manifest", KeyType::kString,
       "JSON-lines dataset manifest"},
      {"noise_list", "--noise-list", KeyType::kString,
       "text file with one noise wav path per line"},
      {"scenario", "--scenario", KeyType::kString,
       "mixed_noise or mixed_speech"},
      {"mix_gain_db", "--gain-db", KeyType::kFloat,
       "interferer gain in dB (0 = unit mixing gain)"},
      {"crop_length", "--crop-length", KeyType::kInt,
       "training crop in samples (multiple of 256)"},
      {"accel_channels", "--accel-channels", KeyType::kInt,
       "number of accelerometer channels fed to the model"},
      {"accel_axis", "--accel-axis", KeyType::kInt,
       "first accelerometer channel to use"},
      {"synth_checkpoint", "--synth-checkpoint", KeyType::kString,
       "accel-synthesis checkpoint for entries without recordings"},
      {"out_dir", "--out", KeyType::kString, "output directory"},
      {"seed", "--seed", KeyType::kInt, "run seed"},
      {"num_workers", "--num-workers", KeyType::kInt,
       "background example-builder threads"},
      {"base_channels", "--base-channels", KeyType::kInt,
       "generator width after the first convolution"},
      {"audio_only", "--audio-only", KeyType::kBool,
       "train/evaluate the audio-only model variant"},
      {"disc_base_channels", "--disc-base-channels", KeyType::kInt,
       "discriminator initial width"},
      {"disc_max_channels", "--disc-max-channels", KeyType::kInt,
       "discriminator channel cap"},
      {"batch_size", "--batch-size", KeyType::kInt, "examples per step"},
      {"learning_rate", "--learning-rate", KeyType::kFloat,
       "constant Adam learning rate"},
      {"beta1", "--beta1", KeyType::kFloat, "Adam beta1"},
      {"beta2", "--beta2", KeyType::kFloat, "Adam beta2"},
      {"total_steps", "--steps", KeyType::kInt, "training steps"},
      {"lambda", "--lambda", KeyType::kFloat,
       "weight of the feature-matching loss"},
      {"checkpoint_every", "--checkpoint-every", KeyType::kInt,
       "checkpoint interval in steps"},
      {"resume", "--resume", KeyType::kBool,
       "resume from the latest checkpoint in the output directory"},
      {"checkpoint", "--ckpt", KeyType::kString, "checkpoint directory"},
      {"decimation_factor", "--decimation-factor", KeyType::kInt,
       "simulate a lower-rate accelerometer (1 = full bandwidth)"},
      {"decimation_sweep", "--decimation-sweep", KeyType::kBool,
       "evaluate the full factor sweep {1,16,20,32,40,50,64,80,100}"},
      {"zero_accel", "--zero-accel", KeyType::kBool,
       "diagnostic: feed a zeroed accelerometer channel"},
      {"emit_plot", "--emit-plot", KeyType::kBool,
       "write an SVG of SI-SDRi vs simulated rate"},
      {"in_audio", "--in-audio", KeyType::kString, "input audio wav"},
      {"in_accel", "--in-accel", KeyType::kString, "input accelerometer wav"},
      {"out_wav", "--out-wav", KeyType::kString, "output wav path"},
      {"mixtures_per_entry", "--mixtures-per-entry", KeyType::kInt,
       "materialized mixtures per manifest entry"},
  };
  return table;
}

std::string env_name_for(const std::string& key) {
  std::string name = "SEANET_";
  for (char c : key) name += static_cast<char>(std::toupper(c));
  return name;
}

void apply_typed(json& cfg, const KeySpec& spec, const std::string& value) {
  switch (spec.type) {
    case KeyType::kString: cfg[spec.key] = value; break;
    case KeyType::kInt: cfg[spec.key] = std::stoll(value); break;
    case KeyType::kFloat: cfg[spec.key] = std::stod(value); break;
    case KeyType::kBool:
      cfg[spec.key] = value == "1" || value == "true" || value == "yes";
      break;
  }
}

struct CommandContext {
  json cfg = json::object();
  std::vector<std::pair<const KeySpec*, std::string>> flag_values;
};

// Registers every key as a string option; typed conversion happens when the
// resolved config is assembled, keeping precedence handling uniform.
void add_key_options(CLI::App* cmd, CommandContext& ctx) {
  ctx.flag_values.reserve(key_table().size());
  for (const KeySpec& spec : key_table()) {
    ctx.flag_values.emplace_back(&spec, std::string());
    auto& slot = ctx.flag_values.back().second;
    if (spec.type == KeyType::kBool) {
      cmd->add_flag_callback(
          spec.flag, [&slot] { slot = "true"; }, spec.help);
    } else {
      cmd->add_option(spec.flag, slot, spec.help);
    }
  }
}

json resolve_config(const std::string& config_path, const CommandContext& ctx) {
  json cfg = json::object();
  if (!config_path.empty()) {
    std::ifstream is(config_path);
    if (!is.good()) {
      std::fprintf(stderr, "error: io: cannot open config file %s\n",
                   config_path.c_str());
      std::exit(2);
    }
    cfg = json::parse(is, nullptr, false);
    if (cfg.is_discarded() || !cfg.is_object()) {
      std::fprintf(stderr, "error: config: %s is not a JSON object\n",
                   config_path.c_str());
      std::exit(4);
    }
  }
  for (const KeySpec& spec : key_table()) {
    if (const char* env = std::getenv(env_name_for(spec.key).c_str()))
      apply_typed(cfg, spec, env);
  }
  for (const auto& [spec, value] : ctx.flag_values) {
    if (!value.empty()) apply_typed(cfg, *spec, value);
  }
  return cfg;
}

int fail_status(seanet_status s) {
  std::fprintf(stderr, "error: %s: %s\n", seanet_status_name(s),
               seanet_last_error());
  return static_cast<int>(s);
}

int print_owned(char* s) {
  std::printf("%s\n", s);
  seanet_string_free(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SEANet multimodal speech enhancement"};
  app.require_subcommand(1);
  app.fallthrough();  // --config may appear after the subcommand name
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file (overridden by SEANET_* env and flags)");

  struct Sub {
    CLI::App* cmd;
    CommandContext ctx;
  };
  auto make_sub = [&](const char* name, const char* desc) {
    auto sub = std::make_unique<Sub>();
    sub->cmd = app.add_subcommand(name, desc);
    sub->cmd->fallthrough();  // lets --config follow the subcommand
    add_key_options(sub->cmd, sub->ctx);
    return sub;
  };

  auto mixtures = make_sub("make-mixtures",
                           "materialize noisy/clean/accel wav triples");
  auto train = make_sub("train", "train the enhancement model");
  auto synth = make_sub("train-accel-synth",
                        "train the clean-audio-to-accelerometer model");
  auto denoise = make_sub("denoise", "enhance one utterance");
  auto evaluate = make_sub("evaluate", "SI-SDRi evaluation over a manifest");

  CLI11_PARSE(app, argc, argv);

  auto config_for = [&](Sub& sub) {
    return resolve_config(config_path, sub.ctx).dump();
  };

  if (mixtures->cmd->parsed()) {
    char* report = nullptr;
    const std::string cfg = config_for(*mixtures);
    if (auto s = seanet_run_make_mixtures(cfg.c_str(), &report))
      return fail_status(s);
    return print_owned(report);
  }
  if (train->cmd->parsed()) {
    char* path = nullptr;
    const std::string cfg = config_for(*train);
    if (auto s = seanet_run_train(cfg.c_str(), &path)) return fail_status(s);
    std::printf("final checkpoint: %s\n", path);
    seanet_string_free(path);
    return 0;
  }
  if (synth->cmd->parsed()) {
    char* path = nullptr;
    const std::string cfg = config_for(*synth);
    if (auto s = seanet_run_train_accel_synth(cfg.c_str(), &path))
      return fail_status(s);
    std::printf("final checkpoint: %s\n", path);
    seanet_string_free(path);
    return 0;
  }
  if (denoise->cmd->parsed()) {
    const std::string cfg = config_for(*denoise);
    if (auto s = seanet_run_denoise(cfg.c_str())) return fail_status(s);
    const json j = json::parse(cfg);
    std::printf("wrote %s\n", j.value("out_wav", "").c_str());
    return 0;
  }
  if (evaluate->cmd->parsed()) {
    char* result = nullptr;
    const std::string cfg = config_for(*evaluate);
    if (auto s = seanet_run_evaluate(cfg.c_str(), &result))
      return fail_status(s);
    const json j = json::parse(result);
    if (j.contains("sweep")) {
      std::printf("factor,rate_hz,mean_si_sdri,std_si_sdri,included\n");
      for (const auto& r : j["sweep"])
        std::printf("%d,%d,%.3f,%.3f,%d\n", r["decimation_factor"].get<int>(),
                    r["simulated_rate_hz"].get<int>(),
                    r["mean_si_sdri"].get<double>(),
                    r["std_si_sdri"].get<double>(), r["included"].get<int>());
    } else {
      std::printf("scenario=%s factor=%d mean SI-SDRi=%.3f dB (std %.3f, n=%d)\n",
                  j["scenario"].get<std::string>().c_str(),
                  j["decimation_factor"].get<int>(),
                  j["mean_si_sdri"].get<double>(),
                  j["std_si_sdri"].get<double>(), j["included"].get<int>());
    }
    seanet_string_free(result);
    return 0;
  }
  return 1;
}
