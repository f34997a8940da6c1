// src/eval/evaluate.cpp

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

#include "eval/evaluate.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "common/error.h"
#include "eval/metrics.h"
#include "json.hpp"
#include "nn/rng.h"
#include "signal/dsp.h"

namespace seanet {

namespace {

constexpr double kSilentRms = 1e-5;

// Zero-pads channels to a multiple of `stride`, runs the generator, trims.
std::vector<float> run_generator(const Generator& gen, const Waveform& audio,
                                 const Waveform& accel) {
  const int64_t n = audio.length();
  const int stride = gen.spec().total_stride();
  const int64_t padded = (n + stride - 1) / stride * stride;

  nn::Tensor audio_t =
      nn::Tensor::zeros({1, 1, static_cast<int>(padded)}, false);
  std::copy(audio.mono().begin(), audio.mono().end(), audio_t.data());

  nn::Tensor accel_t;
  if (gen.spec().accel_channels > 0) {
    SEANET_CHECK(accel.num_channels() == gen.spec().accel_channels,
                 ErrorCategory::kShape,
                 "evaluation: conditioning channel count mismatch");
    accel_t = nn::Tensor::zeros(
        {1, accel.num_channels(), static_cast<int>(padded)}, false);
    for (int c = 0; c < accel.num_channels(); ++c)
      std::copy(accel.ch(c).begin(), accel.ch(c).end(),
                accel_t.data() + static_cast<int64_t>(c) * padded);
  }
  nn::Tape tape;
  Generator::Forward fwd = gen.forward(tape, audio_t, accel_t, false);
  return std::vector<float>(fwd.out.data(), fwd.out.data() + n);
}

std::string stem_of(const std::string& path) {
  const size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

}  // namespace

EvalResult evaluate_corpus(const Generator& gen, const ExampleFactory& factory,
                           const EvalOptions& opts) {
  EvalResult result;
  result.scenario = scenario_name(factory.manifest().scenario);
  result.decimation_factor = opts.decimation_factor;

  double sum = 0.0, sum_sq = 0.0;
  for (int64_t i = 0; i < factory.size(); ++i) {
    const uint64_t ex_seed = mix_seed(opts.seed, 0xE7A1, static_cast<uint64_t>(i));
    TrainingExample ex = factory.make_full(i, ex_seed);
    if (result.simulated_rate_hz == 0)
      result.simulated_rate_hz = ex.y_m.sample_rate / opts.decimation_factor;

    EvalExample row;
    row.example_id = stem_of(
        factory.manifest().entries[static_cast<size_t>(i)].clean_path);
    if (rms(ex.y_m.mono()) < kSilentRms) {
      row.excluded = true;
      result.per_example.push_back(row);
      ++result.excluded;
      continue;
    }

    Waveform accel = ex.x_a;
    if (accel.num_channels() > 0) {
      if (opts.zero_accel) {
        for (auto& c : accel.channels) std::fill(c.begin(), c.end(), 0.0f);
      } else if (opts.decimation_factor > 1) {
        accel = band_limit(accel, opts.decimation_factor);
      }
    }

    const std::vector<float> enhanced = run_generator(gen, ex.x_m, accel);
    row.si_sdr_in = si_sdr_db(ex.x_m.mono(), ex.y_m.mono());
    row.si_sdr_out = si_sdr_db(enhanced, ex.y_m.mono());
    row.si_sdri = row.si_sdr_out - row.si_sdr_in;
    sum += row.si_sdri;
    sum_sq += row.si_sdri * row.si_sdri;
    ++result.included;
    result.per_example.push_back(std::move(row));
  }

  if (result.included > 0) {
    result.mean_si_sdri = sum / result.included;
    if (result.included > 1) {
      const double var =
          (sum_sq - sum * sum / result.included) / (result.included - 1);
      result.std_si_sdri = var > 0.0 ? std::sqrt(var) : 0.0;
    }
  }
  return result;
}

Waveform denoise_waveform(const Generator& gen, const Waveform& audio_in,
                          const Waveform& accel_in, int decimation_factor,
                          double high_pass_hz) {
  SEANET_CHECK(audio_in.num_channels() >= 1, ErrorCategory::kInvalidArgument,
               "denoise: empty audio");
  Waveform audio = normalize(high_pass(audio_in.select_channel(0),
                                       high_pass_hz));

  Waveform accel;
  if (gen.spec().accel_channels > 0) {
    SEANET_CHECK(accel_in.num_channels() >= gen.spec().accel_channels,
                 ErrorCategory::kMissingModality,
                 "denoise: checkpoint expects an accelerometer input");
    // Alignment gate: duration mismatch beyond one accelerometer sample.
    const double dur_diff =
        std::fabs(audio_in.duration_s() - accel_in.duration_s());
    SEANET_CHECK(dur_diff <= 1.0 / accel_in.sample_rate + 1e-9,
                 ErrorCategory::kInvalidArgument,
                 "denoise: audio and accelerometer durations differ by more "
                 "than one accelerometer sample");
    accel.sample_rate = accel_in.sample_rate;
    for (int c = 0; c < gen.spec().accel_channels; ++c)
      accel.channels.push_back(accel_in.ch(c));
    accel = normalize(high_pass(accel, high_pass_hz));
    if (accel.sample_rate != audio.sample_rate)
      accel = resample(accel, audio.sample_rate);
    if (decimation_factor > 1) accel = band_limit(accel, decimation_factor);
    // Trim to the audio length (resampling can leave a sample of slack).
    for (auto& c : accel.channels)
      c.resize(static_cast<size_t>(audio.length()), 0.0f);
  }

  Waveform out;
  out.sample_rate = audio.sample_rate;
  out.channels.push_back(run_generator(gen, audio, accel));
  return out;
}

void write_eval_csv(const std::string& path, const EvalResult& r) {
  std::ofstream os(path, std::ios::trunc);
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "cannot write: " + path);
  os << "example_id,si_sdr_in,si_sdr_out,si_sdri,excluded\n";
  char row[256];
  for (const auto& e : r.per_example) {
    std::snprintf(row, sizeof(row), "%s,%.6f,%.6f,%.6f,%d\n",
                  e.example_id.c_str(), e.si_sdr_in, e.si_sdr_out, e.si_sdri,
                  e.excluded ? 1 : 0);
    os << row;
  }
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "short write: " + path);
}

std::string eval_result_to_json(const EvalResult& r) {
  nlohmann::json j;
  j["scenario"] = r.scenario;
  j["decimation_factor"] = r.decimation_factor;
  j["simulated_rate_hz"] = r.simulated_rate_hz;
  j["mean_si_sdri"] = r.mean_si_sdri;
  j["std_si_sdri"] = r.std_si_sdri;
  j["included"] = r.included;
  j["excluded"] = r.excluded;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : r.per_example) {
    nlohmann::json row;
    row["example_id"] = e.example_id;
    row["si_sdr_in"] = e.si_sdr_in;
    row["si_sdr_out"] = e.si_sdr_out;
    row["si_sdri"] = e.si_sdri;
    row["excluded"] = e.excluded;
    rows.push_back(row);
  }
  j["per_example"] = rows;
  return j.dump(2);
}

void write_eval_json(const std::string& path, const EvalResult& r) {
  std::ofstream os(path, std::ios::trunc);
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "cannot write: " + path);
  os << eval_result_to_json(r) << "\n";
}

void write_sweep_csv(const std::string& path,
                     const std::vector<EvalResult>& results) {
  std::ofstream os(path, std::ios::trunc);
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "cannot write: " + path);
  os << "decimation_factor,simulated_rate_hz,scenario,included,mean_si_sdri,"
        "std_si_sdri\n";
  char row[256];
  for (const auto& r : results) {
    std::snprintf(row, sizeof(row), "%d,%d,%s,%d,%.6f,%.6f\n",
                  r.decimation_factor, r.simulated_rate_hz,
                  r.scenario.c_str(), r.included, r.mean_si_sdri,
                  r.std_si_sdri);
    os << row;
  }
}

void write_sweep_svg(const std::string& path,
                     const std::vector<EvalResult>& results) {
  SEANET_CHECK(!results.empty(), ErrorCategory::kInvalidArgument,
               "sweep plot needs at least one result");
  const double W = 640, H = 420, ml = 70, mr = 20, mt = 30, mb = 60;
  double xmin = 1e30, xmax = -1e30, ymin = 1e30, ymax = -1e30;
  for (const auto& r : results) {
    const double x = std::log10(double(r.simulated_rate_hz));
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, r.mean_si_sdri);
    ymax = std::max(ymax, r.mean_si_sdri);
  }
  if (xmax - xmin < 1e-9) { xmin -= 0.5; xmax += 0.5; }
  const double ypad = std::max(0.5, (ymax - ymin) * 0.1);
  ymin -= ypad;
  ymax += ypad;
  auto px = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr);
  };
  auto py = [&](double y) {
    return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb);
  };

  std::ofstream os(path, std::ios::trunc);
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "cannot write: " + path);
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='"
     << H << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  os << "<line x1='" << ml << "' y1='" << H - mb << "' x2='" << W - mr
     << "' y2='" << H - mb << "' stroke='black'/>\n";
  os << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='"
     << H - mb << "' stroke='black'/>\n";
  os << "<text x='" << W / 2 << "' y='" << H - 15
     << "' text-anchor='middle' font-size='14'>simulated accelerometer "
        "sampling rate (Hz, log scale)</text>\n";
  os << "<text x='18' y='" << H / 2
     << "' text-anchor='middle' font-size='14' transform='rotate(-90 18 "
     << H / 2 << ")'>SI-SDRi (dB)</text>\n";

  std::vector<EvalResult> sorted = results;
  std::sort(sorted.begin(), sorted.end(),
            [](const EvalResult& a, const EvalResult& b) {
              return a.simulated_rate_hz < b.simulated_rate_hz;
            });
  os << "<polyline fill='none' stroke='steelblue' stroke-width='2' points='";
  for (const auto& r : sorted)
    os << px(std::log10(double(r.simulated_rate_hz))) << ","
       << py(r.mean_si_sdri) << " ";
  os << "'/>\n";
  for (const auto& r : sorted) {
    const double x = px(std::log10(double(r.simulated_rate_hz)));
    os << "<circle cx='" << x << "' cy='" << py(r.mean_si_sdri)
       << "' r='4' fill='steelblue'/>\n";
    os << "<text x='" << x << "' y='" << H - mb + 18
       << "' text-anchor='middle' font-size='11'>" << r.simulated_rate_hz
       << "</text>\n";
  }
  // y-axis ticks at integer dB values
  const int y0 = static_cast<int>(std::ceil(ymin));
  const int y1 = static_cast<int>(std::floor(ymax));
  const int step = std::max(1, (y1 - y0) / 8);
  for (int y = y0; y <= y1; y += step) {
    os << "<line x1='" << ml - 4 << "' y1='" << py(y) << "' x2='" << ml
       << "' y2='" << py(y) << "' stroke='black'/>\n";
    os << "<text x='" << ml - 8 << "' y='" << py(y) + 4
       << "' text-anchor='end' font-size='11'>" << y << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace seanet
