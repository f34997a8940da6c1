// src/signal/dsp.h

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

#ifndef SEANET_SIGNAL_DSP_H_
#define SEANET_SIGNAL_DSP_H_

#include "signal/waveform.h"

namespace seanet {

// Zero-phase 2nd-order Butterworth high-pass (forward-backward pass per
// channel). Output length and rate match the input.
Waveform high_pass(const Waveform& w, double cutoff_hz);

// Divides every sample by 1.1 * quantile(|x|, 0.9999) over all channels
// jointly, then clips to [-1, 1]. Near-silent input (q < 1e-8) is returned
// unchanged.
Waveform normalize(const Waveform& w);

// Kaiser-windowed-sinc polyphase resampling at a rational rate ratio.
Waveform resample(const Waveform& w, int target_rate_hz);

// Anti-alias filter + decimate by `factor` + re-interpolate back to the
// original rate and exact original length. Content above the decimated
// Nyquist (rate / (2*factor)) is attenuated by >= 40 dB.
Waveform band_limit(const Waveform& w, int factor);

// Single-channel rational resampler used by the two functions above.
// out_length < 0 derives round(n * up / down).
std::vector<float> resample_channel(const std::vector<float>& x, int up,
                                    int down, int64_t out_length = -1);

// Interpolated order statistic of the magnitudes, q in [0, 1].
double abs_quantile(const Waveform& w, double q);

// Goertzel single-bin power of a tone; test/diagnostic helper.
double tone_power(const std::vector<float>& x, double freq_hz, int rate);

}  // namespace seanet

#endif  // SEANET_SIGNAL_DSP_H_
