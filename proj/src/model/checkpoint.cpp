// src/model/checkpoint.cpp

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

#include "model/checkpoint.h"

#include <filesystem>
#include <fstream>

#include "common/error.h"
#include "json.hpp"
#include "nn/serialize.h"

namespace seanet {

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::trunc);
  SEANET_CHECK(os.good(), ErrorCategory::kIo,
               "cannot write: " + path.string());
  os << text;
  SEANET_CHECK(os.good(), ErrorCategory::kIo,
               "short write: " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream is(path);
  SEANET_CHECK(is.good(), ErrorCategory::kIo, "cannot read: " + path.string());
  return std::string(std::istreambuf_iterator<char>(is),
                     std::istreambuf_iterator<char>());
}

}  // namespace

void save_checkpoint(const std::string& dir, const Generator& gen,
                     const MultiScaleDiscriminator& disc, const nn::Adam& opt_g,
                     const nn::Adam& opt_d, const CheckpointMeta& meta,
                     const std::string& config_json) {
  const fs::path final_dir(dir);
  const fs::path tmp_dir(dir + ".tmp");
  std::error_code ec;
  fs::remove_all(tmp_dir, ec);
  fs::create_directories(tmp_dir);

  nlohmann::json spec;
  spec["generator"] = nlohmann::json::parse(gen.spec().to_json());
  spec["discriminator"] = nlohmann::json::parse(disc.spec().to_json());
  write_text(tmp_dir / "spec.json", spec.dump(2));

  nlohmann::json state;
  state["step"] = meta.step;
  state["seed"] = meta.seed;
  write_text(tmp_dir / "state.json", state.dump(2));
  write_text(tmp_dir / "config.json",
             config_json.empty() ? "{}" : config_json);

  nn::save_tensor_file((tmp_dir / "generator.tensors").string(),
                       gen.params().items);
  nn::save_tensor_file((tmp_dir / "discriminator.tensors").string(),
                       disc.params().items);
  nn::save_tensor_file((tmp_dir / "opt_g.tensors").string(),
                       opt_g.state_tensors());
  nn::save_tensor_file((tmp_dir / "opt_d.tensors").string(),
                       opt_d.state_tensors());

  fs::remove_all(final_dir, ec);
  fs::rename(tmp_dir, final_dir);
}

LoadedCheckpoint load_checkpoint(const std::string& dir) {
  const fs::path p(dir);
  SEANET_CHECK(fs::exists(p / "spec.json"), ErrorCategory::kIo,
               "not a checkpoint directory: " + dir);
  LoadedCheckpoint out;
  nlohmann::json spec = nlohmann::json::parse(read_text(p / "spec.json"));
  out.gen_spec = GeneratorSpec::from_json(spec["generator"].dump());
  out.disc_spec = DiscriminatorSpec::from_json(spec["discriminator"].dump());
  nlohmann::json state = nlohmann::json::parse(read_text(p / "state.json"));
  out.meta.step = state.value("step", 0);
  out.meta.seed = state.value("seed", 0ULL);
  out.config_json = read_text(p / "config.json");
  out.generator = nn::load_tensor_file((p / "generator.tensors").string());
  out.discriminator =
      nn::load_tensor_file((p / "discriminator.tensors").string());
  out.opt_g = nn::load_tensor_file((p / "opt_g.tensors").string());
  out.opt_d = nn::load_tensor_file((p / "opt_d.tensors").string());
  return out;
}

std::unique_ptr<Generator> load_generator(const std::string& dir) {
  const fs::path p(dir);
  SEANET_CHECK(fs::exists(p / "spec.json"), ErrorCategory::kIo,
               "not a checkpoint directory: " + dir);
  nlohmann::json spec = nlohmann::json::parse(read_text(p / "spec.json"));
  auto gen = std::make_unique<Generator>(
      GeneratorSpec::from_json(spec["generator"].dump()));
  gen->load_tensors(nn::load_tensor_file((p / "generator.tensors").string()));
  return gen;
}

std::optional<std::string> latest_checkpoint(const std::string& root) {
  const fs::path p(root);
  if (!fs::exists(p)) return std::nullopt;
  int64_t best = -1;
  fs::path best_path;
  for (const auto& entry : fs::directory_iterator(p)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    if (name.rfind("step-", 0) != 0) continue;
    try {
      const int64_t step = std::stoll(name.substr(5));
      if (step > best && fs::exists(entry.path() / "spec.json")) {
        best = step;
        best_path = entry.path();
      }
    } catch (const std::exception&) {
      continue;
    }
  }
  if (best < 0) return std::nullopt;
  return best_path.string();
}

}  // namespace seanet
