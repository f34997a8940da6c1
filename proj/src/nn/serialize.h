// src/nn/serialize.h

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

#ifndef SEANET_NN_SERIALIZE_H_
#define SEANET_NN_SERIALIZE_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nn/tensor.h"

namespace seanet::nn {

// Flat little-endian container for named float tensors. Round-trips are
// bit-exact, which checkpoint resume relies on.
void save_tensor_file(
    const std::string& path,
    const std::vector<std::pair<std::string, Tensor>>& tensors);

std::map<std::string, Tensor> load_tensor_file(const std::string& path);

}  // namespace seanet::nn

#endif  // SEANET_NN_SERIALIZE_H_
