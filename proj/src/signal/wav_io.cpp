// src/signal/wav_io.cpp

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

#include "signal/wav_io.h"

#include <algorithm>
#include <cstring>
#include <fstream>

namespace seanet {

namespace {

struct FmtInfo {
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
};

template <typename T>
T read_le(std::ifstream& is, const std::string& path) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  SEANET_CHECK(is.good(), ErrorCategory::kIo, "truncated wav file: " + path);
  return v;
}

template <typename T>
void write_le(std::ofstream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

}  // namespace

Waveform read_wav(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  SEANET_CHECK(is.good(), ErrorCategory::kIo, "cannot open wav file: " + path);

  char tag[4];
  is.read(tag, 4);
  SEANET_CHECK(is.good() && std::memcmp(tag, "RIFF", 4) == 0,
               ErrorCategory::kIo, "not a RIFF file: " + path);
  (void)read_le<uint32_t>(is, path);
  is.read(tag, 4);
  SEANET_CHECK(is.good() && std::memcmp(tag, "WAVE", 4) == 0,
               ErrorCategory::kIo, "not a WAVE file: " + path);

  FmtInfo fmt;
  bool have_fmt = false;
  std::vector<char> payload;
  while (is.read(tag, 4)) {
    const uint32_t chunk_size = read_le<uint32_t>(is, path);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      SEANET_CHECK(chunk_size >= 16, ErrorCategory::kIo,
                   "malformed fmt chunk: " + path);
      fmt.format = read_le<uint16_t>(is, path);
      fmt.channels = read_le<uint16_t>(is, path);
      fmt.sample_rate = read_le<uint32_t>(is, path);
      (void)read_le<uint32_t>(is, path);  // byte rate
      (void)read_le<uint16_t>(is, path);  // block align
      fmt.bits_per_sample = read_le<uint16_t>(is, path);
      uint32_t consumed = 16;
      if (fmt.format == kFormatExtensible && chunk_size >= 16 + 2 + 22) {
        const uint16_t ext_size = read_le<uint16_t>(is, path);
        consumed += 2;
        if (ext_size >= 22) {
          (void)read_le<uint16_t>(is, path);  // valid bits
          (void)read_le<uint32_t>(is, path);  // channel mask
          fmt.format = read_le<uint16_t>(is, path);  // subformat GUID leads
          is.ignore(14);
          consumed += 22;
        }
      }
      if (chunk_size > consumed) is.ignore(chunk_size - consumed);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      payload.resize(chunk_size);
      is.read(payload.data(), chunk_size);
      SEANET_CHECK(is.gcount() == static_cast<std::streamsize>(chunk_size),
                   ErrorCategory::kIo, "truncated data chunk: " + path);
      break;
    } else {
      is.ignore(chunk_size + (chunk_size & 1));
    }
  }
  SEANET_CHECK(have_fmt, ErrorCategory::kIo, "missing fmt chunk: " + path);
  SEANET_CHECK(!payload.empty(), ErrorCategory::kIo,
               "missing data chunk: " + path);
  SEANET_CHECK(fmt.channels > 0 && fmt.sample_rate > 0, ErrorCategory::kIo,
               "malformed wav header: " + path);

  const int nch = fmt.channels;
  Waveform w;
  w.sample_rate = static_cast<int>(fmt.sample_rate);
  if (fmt.format == kFormatPcm && fmt.bits_per_sample == 16) {
    const int64_t frames =
        static_cast<int64_t>(payload.size()) / (2 * nch);
    w.channels.assign(nch, std::vector<float>(frames));
    const int16_t* src = reinterpret_cast<const int16_t*>(payload.data());
    for (int64_t i = 0; i < frames; ++i)
      for (int c = 0; c < nch; ++c)
        w.channels[c][i] = static_cast<float>(src[i * nch + c]) / 32768.0f;
  } else if (fmt.format == kFormatFloat && fmt.bits_per_sample == 32) {
    const int64_t frames =
        static_cast<int64_t>(payload.size()) / (4 * nch);
    w.channels.assign(nch, std::vector<float>(frames));
    const float* src = reinterpret_cast<const float*>(payload.data());
    for (int64_t i = 0; i < frames; ++i)
      for (int c = 0; c < nch; ++c) w.channels[c][i] = src[i * nch + c];
  } else {
    fail(ErrorCategory::kIo,
         "unsupported wav encoding (want 16-bit PCM or 32-bit float): " + path);
  }
  return w;
}

void write_wav(const std::string& path, const Waveform& w,
               WavEncoding encoding) {
  SEANET_CHECK(w.sample_rate > 0 && w.num_channels() > 0 && w.length() > 0,
               ErrorCategory::kInvalidArgument, "cannot write empty waveform");
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "cannot open for writing: " + path);

  const int nch = w.num_channels();
  const int64_t frames = w.length();
  const int bytes_per_sample = encoding == WavEncoding::kPcm16 ? 2 : 4;
  const uint32_t data_size =
      static_cast<uint32_t>(frames * nch * bytes_per_sample);

  os.write("RIFF", 4);
  write_le<uint32_t>(os, 36 + data_size);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  write_le<uint32_t>(os, 16);
  write_le<uint16_t>(os, encoding == WavEncoding::kPcm16 ? kFormatPcm
                                                         : kFormatFloat);
  write_le<uint16_t>(os, static_cast<uint16_t>(nch));
  write_le<uint32_t>(os, static_cast<uint32_t>(w.sample_rate));
  write_le<uint32_t>(os, static_cast<uint32_t>(w.sample_rate * nch *
                                               bytes_per_sample));
  write_le<uint16_t>(os, static_cast<uint16_t>(nch * bytes_per_sample));
  write_le<uint16_t>(os, static_cast<uint16_t>(bytes_per_sample * 8));
  os.write("data", 4);
  write_le<uint32_t>(os, data_size);

  if (encoding == WavEncoding::kPcm16) {
    std::vector<int16_t> frame(nch);
    for (int64_t i = 0; i < frames; ++i) {
      for (int c = 0; c < nch; ++c) {
        const long q = std::lrintf(w.channels[c][i] * 32768.0f);
        frame[c] = static_cast<int16_t>(std::clamp(q, -32768L, 32767L));
      }
      os.write(reinterpret_cast<const char*>(frame.data()),
               static_cast<std::streamsize>(sizeof(int16_t) * nch));
    }
  } else {
    std::vector<float> frame(nch);
    for (int64_t i = 0; i < frames; ++i) {
      for (int c = 0; c < nch; ++c) frame[c] = w.channels[c][i];
      os.write(reinterpret_cast<const char*>(frame.data()),
               static_cast<std::streamsize>(sizeof(float) * nch));
    }
  }
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "short write: " + path);
}

}  // namespace seanet
