// src/signal/wav_io.h

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

#ifndef SEANET_SIGNAL_WAV_IO_H_
#define SEANET_SIGNAL_WAV_IO_H_

#include <string>

#include "signal/waveform.h"

namespace seanet {

enum class WavEncoding { kPcm16, kFloat32 };

// Reads 16-bit PCM or 32-bit IEEE float RIFF/WAVE (plain or EXTENSIBLE),
// any channel count; sample rate comes from the header.
Waveform read_wav(const std::string& path);

void write_wav(const std::string& path, const Waveform& w,
               WavEncoding encoding = WavEncoding::kFloat32);

}  // namespace seanet

#endif  // SEANET_SIGNAL_WAV_IO_H_
