// src/nn/serialize.cpp

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

#include "nn/serialize.h"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "common/error.h"

namespace seanet::nn {

namespace {
constexpr char kMagic[8] = {'S', 'E', 'A', 'T', 'E', 'N', 'S', '1'};

template <typename T>
void write_pod(std::ofstream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}
}  // namespace

void save_tensor_file(
    const std::string& path,
    const std::vector<std::pair<std::string, Tensor>>& tensors) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  SEANET_CHECK(os.good(), ErrorCategory::kIo,
               "cannot open for writing: " + path);
  os.write(kMagic, sizeof(kMagic));
  write_pod<uint32_t>(os, static_cast<uint32_t>(tensors.size()));
  for (const auto& [name, t] : tensors) {
    write_pod<uint32_t>(os, static_cast<uint32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    const Shape& s = t.shape();
    write_pod<int32_t>(os, s.b);
    write_pod<int32_t>(os, s.c);
    write_pod<int32_t>(os, s.t);
    os.write(reinterpret_cast<const char*>(t.data()),
             static_cast<std::streamsize>(sizeof(float) * t.numel()));
  }
  SEANET_CHECK(os.good(), ErrorCategory::kIo, "short write: " + path);
}

std::map<std::string, Tensor> load_tensor_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  SEANET_CHECK(is.good(), ErrorCategory::kIo, "cannot open: " + path);
  char magic[8];
  is.read(magic, sizeof(magic));
  SEANET_CHECK(is.good() && std::memcmp(magic, kMagic, sizeof(kMagic)) == 0,
               ErrorCategory::kIo, "not a tensor file: " + path);
  const uint32_t count = read_pod<uint32_t>(is);
  std::map<std::string, Tensor> out;
  for (uint32_t i = 0; i < count; ++i) {
    const uint32_t name_len = read_pod<uint32_t>(is);
    SEANET_CHECK(name_len < 4096, ErrorCategory::kIo,
                 "corrupt tensor file: " + path);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    Shape s;
    s.b = read_pod<int32_t>(is);
    s.c = read_pod<int32_t>(is);
    s.t = read_pod<int32_t>(is);
    SEANET_CHECK(s.b > 0 && s.c > 0 && s.t > 0 && s.numel() < (1LL << 33),
                 ErrorCategory::kIo, "corrupt tensor shape in: " + path);
    Tensor t = Tensor::zeros(s, false);
    is.read(reinterpret_cast<char*>(t.data()),
            static_cast<std::streamsize>(sizeof(float) * t.numel()));
    SEANET_CHECK(is.good(), ErrorCategory::kIo, "truncated tensor file: " + path);
    out.emplace(std::move(name), std::move(t));
  }
  return out;
}

}  // namespace seanet::nn
