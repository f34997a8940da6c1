// src/signal/waveform.h

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

#ifndef SEANET_SIGNAL_WAVEFORM_H_
#define SEANET_SIGNAL_WAVEFORM_H_

#include <cmath>
#include <cstdint>
#include <vector>

#include "common/error.h"

namespace seanet {

// Channel-major sampled signal. Samples are nominally in [-1, 1] once
// normalized; processing keeps everything in float.
struct Waveform {
  int sample_rate = 0;
  std::vector<std::vector<float>> channels;

  Waveform() = default;
  Waveform(int rate, int num_channels, int64_t length)
      : sample_rate(rate),
        channels(num_channels, std::vector<float>(length, 0.0f)) {}

  int num_channels() const { return static_cast<int>(channels.size()); }
  int64_t length() const {
    return channels.empty() ? 0 : static_cast<int64_t>(channels[0].size());
  }
  double duration_s() const {
    return sample_rate > 0 ? double(length()) / sample_rate : 0.0;
  }

  std::vector<float>& ch(int i) { return channels[static_cast<size_t>(i)]; }
  const std::vector<float>& ch(int i) const {
    return channels[static_cast<size_t>(i)];
  }

  // Channel 0 of a mono waveform; errors on multi-channel input.
  const std::vector<float>& mono() const {
    SEANET_CHECK(num_channels() == 1, ErrorCategory::kShape,
                 "expected a mono waveform");
    return channels[0];
  }

  Waveform select_channel(int i) const {
    SEANET_CHECK(i >= 0 && i < num_channels(), ErrorCategory::kInvalidArgument,
                 "channel index out of range");
    Waveform out;
    out.sample_rate = sample_rate;
    out.channels.push_back(channels[static_cast<size_t>(i)]);
    return out;
  }
};

inline double rms(const std::vector<float>& x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (float v : x) acc += double(v) * v;
  return std::sqrt(acc / double(x.size()));
}

}  // namespace seanet

#endif  // SEANET_SIGNAL_WAVEFORM_H_
