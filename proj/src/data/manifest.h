// src/data/manifest.h

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

#ifndef SEANET_DATA_MANIFEST_H_
#define SEANET_DATA_MANIFEST_H_

#include <string>
#include <vector>

namespace seanet {

enum class Scenario { kMixedSpeech, kMixedNoise };

Scenario parse_scenario(const std::string& name);
const char* scenario_name(Scenario s);

struct ManifestEntry {
  std::string clean_path;
  std::string accel_path;  // empty when the modality is absent
  std::string speaker_id;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  std::vector<std::string> noise_sources;
  Scenario scenario = Scenario::kMixedNoise;
  double mix_gain_db = 0.0;
};

// JSON-lines manifest with fields clean_path / accel_path / speaker_id,
// plus an optional newline-separated noise list file.
DatasetManifest read_manifest(const std::string& jsonl_path,
                              const std::string& noise_list_path,
                              Scenario scenario, double mix_gain_db);

// Keep only entries whose speaker id is (or is not) in `speakers`;
// implements the per-fold speaker split.
DatasetManifest filter_speakers(const DatasetManifest& m,
                                const std::vector<std::string>& speakers,
                                bool keep);

void write_manifest_jsonl(const std::string& path,
                          const std::vector<ManifestEntry>& entries);

}  // namespace seanet

#endif  // SEANET_DATA_MANIFEST_H_
