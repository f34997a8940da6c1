// src/data/manifest.cpp

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

#include "data/manifest.h"

#include <algorithm>
#include <fstream>

#include "common/error.h"
#include "json.hpp"

namespace seanet {

Scenario parse_scenario(const std::string& name) {
  if (name == "mixed_speech") return Scenario::kMixedSpeech;
  if (name == "mixed_noise") return Scenario::kMixedNoise;
  fail(ErrorCategory::kConfig,
       "unknown scenario '" + name + "' (want mixed_speech or mixed_noise)");
}

const char* scenario_name(Scenario s) {
  return s == Scenario::kMixedSpeech ? "mixed_speech" : "mixed_noise";
}

DatasetManifest read_manifest(const std::string& jsonl_path,
                              const std::string& noise_list_path,
                              Scenario scenario, double mix_gain_db) {
  DatasetManifest m;
  m.scenario = scenario;
  m.mix_gain_db = mix_gain_db;

  std::ifstream is(jsonl_path);
  SEANET_CHECK(is.good(), ErrorCategory::kIo,
               "cannot open manifest: " + jsonl_path);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    SEANET_CHECK(!j.is_discarded() && j.is_object(), ErrorCategory::kConfig,
                 "manifest line " + std::to_string(line_no) +
                     " is not a JSON object: " + jsonl_path);
    SEANET_CHECK(j.contains("clean_path") && j.contains("speaker_id"),
                 ErrorCategory::kConfig,
                 "manifest line " + std::to_string(line_no) +
                     " missing clean_path/speaker_id: " + jsonl_path);
    ManifestEntry e;
    e.clean_path = j["clean_path"].get<std::string>();
    e.speaker_id = j["speaker_id"].get<std::string>();
    if (j.contains("accel_path") && !j["accel_path"].is_null())
      e.accel_path = j["accel_path"].get<std::string>();
    m.entries.push_back(std::move(e));
  }

  if (!noise_list_path.empty()) {
    std::ifstream ns(noise_list_path);
    SEANET_CHECK(ns.good(), ErrorCategory::kIo,
                 "cannot open noise list: " + noise_list_path);
    while (std::getline(ns, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (!line.empty()) m.noise_sources.push_back(line);
    }
  }
  return m;
}

DatasetManifest filter_speakers(const DatasetManifest& m,
                                const std::vector<std::string>& speakers,
                                bool keep) {
  DatasetManifest out = m;
  out.entries.clear();
  for (const auto& e : m.entries) {
    const bool in_list =
        std::find(speakers.begin(), speakers.end(), e.speaker_id) !=
        speakers.end();
    if (in_list == keep) out.entries.push_back(e);
  }
  return out;
}

void write_manifest_jsonl(const std::string& path,
                          const std::vector<ManifestEntry>& entries) {
  std::ofstream os(path, std::ios::trunc);
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "cannot write manifest: " + path);
  for (const auto& e : entries) {
    nlohmann::json j;
    j["clean_path"] = e.clean_path;
    if (!e.accel_path.empty()) j["accel_path"] = e.accel_path;
    j["speaker_id"] = e.speaker_id;
    os << j.dump() << "\n";
  }
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "short write: " + path);
}

}  // namespace seanet
