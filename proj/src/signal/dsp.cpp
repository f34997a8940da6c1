// src/signal/dsp.cpp

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

#include "signal/dsp.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace seanet {

namespace {

struct Biquad {
  double b0, b1, b2, a1, a2;  // a0 normalized to 1
};

Biquad butterworth_highpass(double cutoff_hz, double rate_hz) {
  const double w0 = 2.0 * M_PI * cutoff_hz / rate_hz;
  const double q = 1.0 / std::sqrt(2.0);
  const double alpha = std::sin(w0) / (2.0 * q);
  const double cw = std::cos(w0);
  const double a0 = 1.0 + alpha;
  Biquad f;
  f.b0 = (1.0 + cw) / 2.0 / a0;
  f.b1 = -(1.0 + cw) / a0;
  f.b2 = (1.0 + cw) / 2.0 / a0;
  f.a1 = -2.0 * cw / a0;
  f.a2 = (1.0 - alpha) / a0;
  return f;
}

// Steady-state direct-form-II-transposed state for a unit step, scaled by
// the first sample. Starting from this state a constant input produces the
// exact DC response from sample 0, with no transient.
void step_initial_state(const Biquad& f, double x0, double* s1, double* s2) {
  const double g = (f.b0 + f.b1 + f.b2) / (1.0 + f.a1 + f.a2);  // DC gain
  const double s1u = g - f.b0;
  const double s2u = s1u - f.b1 + f.a1 * g;
  *s1 = s1u * x0;
  *s2 = s2u * x0;
}

void biquad_forward(const Biquad& f, std::vector<double>& x) {
  if (x.empty()) return;
  double s1, s2;
  step_initial_state(f, x[0], &s1, &s2);
  for (double& v : x) {
    const double in = v;
    const double out = f.b0 * in + s1;
    s1 = f.b1 * in - f.a1 * out + s2;
    s2 = f.b2 * in - f.a2 * out;
    v = out;
  }
}

// filtfilt with odd reflection padding at both ends.
std::vector<float> filtfilt(const Biquad& f, const std::vector<float>& x,
                            int64_t pad) {
  const int64_t n = static_cast<int64_t>(x.size());
  pad = std::min<int64_t>(pad, n - 1);
  if (pad < 0) pad = 0;
  std::vector<double> ext(static_cast<size_t>(n + 2 * pad));
  for (int64_t i = 0; i < pad; ++i)
    ext[i] = 2.0 * x[0] - x[static_cast<size_t>(pad - i)];
  for (int64_t i = 0; i < n; ++i) ext[pad + i] = x[static_cast<size_t>(i)];
  for (int64_t i = 0; i < pad; ++i)
    ext[pad + n + i] = 2.0 * x[n - 1] - x[static_cast<size_t>(n - 2 - i)];

  biquad_forward(f, ext);
  std::reverse(ext.begin(), ext.end());
  biquad_forward(f, ext);
  std::reverse(ext.begin(), ext.end());

  std::vector<float> out(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] = static_cast<float>(ext[pad + i]);
  return out;
}

double kaiser_i0(double x) {
  // Series expansion of the zeroth-order modified Bessel function.
  double sum = 1.0, term = 1.0;
  const double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

// Lowpass prototype for a rational up/down stage: stopband edge at the
// tighter Nyquist, ~70 dB attenuation, passband up to 0.85 of that edge.
std::vector<double> design_resample_filter(int up, int down) {
  const int ratio = std::max(up, down);
  const double cutoff = 0.925 * 0.5 / ratio;      // cycles/sample, upsampled rate
  const double trans = 0.15 * 0.5 / ratio;        // transition half-width
  const double atten_db = 70.0;
  const double beta = 0.1102 * (atten_db - 8.7);
  int taps = static_cast<int>(
      std::ceil((atten_db - 7.95) / (2.285 * 2.0 * M_PI * trans)));
  if (taps % 2 == 0) ++taps;  // odd length keeps the filter symmetric
  const int half = taps / 2;
  std::vector<double> h(static_cast<size_t>(taps));
  const double i0b = kaiser_i0(beta);
  for (int i = 0; i < taps; ++i) {
    const int m = i - half;
    const double sinc = m == 0 ? 2.0 * cutoff
                               : std::sin(2.0 * M_PI * cutoff * m) / (M_PI * m);
    const double r = static_cast<double>(m) / half;
    const double win = kaiser_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) /
                       i0b;
    h[static_cast<size_t>(i)] = up * sinc * win;
  }
  return h;
}

}  // namespace

Waveform high_pass(const Waveform& w, double cutoff_hz) {
  SEANET_CHECK(w.length() > 0, ErrorCategory::kInvalidArgument,
               "high_pass: empty waveform");
  SEANET_CHECK(cutoff_hz > 0.0 && cutoff_hz < w.sample_rate / 2.0,
               ErrorCategory::kInvalidArgument,
               "high_pass: cutoff must lie in (0, Nyquist)");
  const Biquad f = butterworth_highpass(cutoff_hz, w.sample_rate);
  // Long enough for the slow 20 Hz transient to die out inside the pad.
  const int64_t pad =
      static_cast<int64_t>(std::ceil(3.0 * w.sample_rate / cutoff_hz));
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.channels.reserve(w.channels.size());
  for (const auto& chan : w.channels) out.channels.push_back(filtfilt(f, chan, pad));
  return out;
}

double abs_quantile(const Waveform& w, double q) {
  std::vector<float> mags;
  mags.reserve(static_cast<size_t>(w.length()) * w.channels.size());
  for (const auto& chan : w.channels)
    for (float v : chan) mags.push_back(std::fabs(v));
  SEANET_CHECK(!mags.empty(), ErrorCategory::kInvalidArgument,
               "quantile of empty waveform");
  // Interpolated order statistic (numpy's "linear" rule).
  const double pos = q * static_cast<double>(mags.size() - 1);
  const size_t k = static_cast<size_t>(pos);
  std::nth_element(mags.begin(), mags.begin() + static_cast<int64_t>(k),
                   mags.end());
  const double vk = mags[k];
  if (k + 1 >= mags.size()) return vk;
  const double frac = pos - static_cast<double>(k);
  if (frac == 0.0) return vk;
  const double vk1 =
      *std::min_element(mags.begin() + static_cast<int64_t>(k) + 1, mags.end());
  return vk + frac * (vk1 - vk);
}

Waveform normalize(const Waveform& w) {
  SEANET_CHECK(w.length() > 0, ErrorCategory::kInvalidArgument,
               "normalize: empty waveform");
  const double q = abs_quantile(w, 0.9999);
  if (q < 1e-8) return w;  // silent clip; dividing would blow up
  const float scale = static_cast<float>(1.0 / (1.1 * q));
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.channels.resize(w.channels.size());
  for (size_t c = 0; c < w.channels.size(); ++c) {
    out.channels[c].resize(w.channels[c].size());
    for (size_t i = 0; i < w.channels[c].size(); ++i)
      out.channels[c][i] = std::clamp(w.channels[c][i] * scale, -1.0f, 1.0f);
  }
  return out;
}

std::vector<float> resample_channel(const std::vector<float>& x, int up,
                                    int down, int64_t out_length) {
  const int64_t n = static_cast<int64_t>(x.size());
  if (out_length < 0)
    out_length = (n * up + down / 2) / down;
  if (up == down) {
    std::vector<float> out(x);
    out.resize(static_cast<size_t>(out_length), 0.0f);
    return out;
  }
  const std::vector<double> h = design_resample_filter(up, down);
  const int64_t taps = static_cast<int64_t>(h.size());
  const int64_t center = taps / 2;
  std::vector<float> out(static_cast<size_t>(out_length));
  for (int64_t m = 0; m < out_length; ++m) {
    // Output sample m sits at position m*down on the up-rate grid; input
    // sample i contributes through tap m*down + center - i*up.
    const int64_t t0 = m * static_cast<int64_t>(down) + center;
    int64_t i_lo = (t0 - (taps - 1) + up - 1) / up;
    int64_t i_hi = t0 / up;
    if (i_lo < 0) i_lo = 0;
    if (i_hi >= n) i_hi = n - 1;
    double acc = 0.0;
    for (int64_t i = i_lo; i <= i_hi; ++i)
      acc += double(x[static_cast<size_t>(i)]) *
             h[static_cast<size_t>(t0 - i * up)];
    out[static_cast<size_t>(m)] = static_cast<float>(acc);
  }
  return out;
}

Waveform resample(const Waveform& w, int target_rate_hz) {
  SEANET_CHECK(target_rate_hz > 0, ErrorCategory::kInvalidArgument,
               "resample: target rate must be positive");
  SEANET_CHECK(w.sample_rate > 0 && w.length() > 0,
               ErrorCategory::kInvalidArgument, "resample: empty waveform");
  if (target_rate_hz == w.sample_rate) return w;
  const int g = static_cast<int>(std::gcd(target_rate_hz, w.sample_rate));
  const int up = target_rate_hz / g;
  const int down = w.sample_rate / g;
  Waveform out;
  out.sample_rate = target_rate_hz;
  out.channels.reserve(w.channels.size());
  for (const auto& chan : w.channels)
    out.channels.push_back(resample_channel(chan, up, down));
  return out;
}

Waveform band_limit(const Waveform& w, int factor) {
  SEANET_CHECK(factor >= 1, ErrorCategory::kInvalidArgument,
               "band_limit: factor must be >= 1");
  SEANET_CHECK(w.sample_rate / factor >= 2, ErrorCategory::kInvalidArgument,
               "band_limit: decimated rate below 2 Hz");
  if (factor == 1) return w;
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.channels.reserve(w.channels.size());
  for (const auto& chan : w.channels) {
    std::vector<float> low = resample_channel(chan, 1, factor);
    out.channels.push_back(resample_channel(
        low, factor, 1, static_cast<int64_t>(chan.size())));
  }
  return out;
}

double tone_power(const std::vector<float>& x, double freq_hz, int rate) {
  // Goertzel on a Hann-windowed interior slice, normalized so that a pure
  // tone of amplitude A reports ~A^2/2 regardless of length.
  const int64_t n = static_cast<int64_t>(x.size());
  const int64_t lo = n / 4, hi = n - n / 4;
  const int64_t m = hi - lo;
  const double k = freq_hz / rate;
  double re = 0.0, im = 0.0, wsum = 0.0;
  for (int64_t i = lo; i < hi; ++i) {
    const double win =
        0.5 - 0.5 * std::cos(2.0 * M_PI * double(i - lo) / double(m - 1));
    const double ph = 2.0 * M_PI * k * double(i);
    re += win * x[static_cast<size_t>(i)] * std::cos(ph);
    im -= win * x[static_cast<size_t>(i)] * std::sin(ph);
    wsum += win;
  }
  const double mag = 2.0 * std::sqrt(re * re + im * im) / wsum;  // amplitude
  return mag * mag / 2.0;
}

}  // namespace seanet
