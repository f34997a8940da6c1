// src/nn/rng.h

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

#ifndef SEANET_NN_RNG_H_
#define SEANET_NN_RNG_H_

#include <cmath>
#include <cstdint>

namespace seanet {

// splitmix64. Hand-rolled so the stream is identical on every platform and
// toolchain; std::normal_distribution makes no such guarantee.
struct Rng {
  uint64_t state = 0;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next_u64() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  float next_float() { return static_cast<float>(next_double()); }

  // uniform in [0, n); n > 0
  int64_t next_below(int64_t n) {
    return static_cast<int64_t>(next_u64() % static_cast<uint64_t>(n));
  }

  // uniform in [lo, hi)
  float next_uniform(float lo, float hi) {
    return lo + (hi - lo) * next_float();
  }

  // Box-Muller from two fresh uniforms; the twin value is discarded so the
  // generator stays cacheless and trivially serializable.
  float next_normal() {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    return static_cast<float>(std::sqrt(-2.0 * std::log(u1)) *
                              std::cos(2.0 * M_PI * u2));
  }
};

// Deterministic seed mixing for derived streams (per epoch, per example, ...).
inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c = 0) {
  Rng r(a * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
  uint64_t h = r.next_u64() ^ (b + 0x452821e638d01377ULL);
  Rng r2(h);
  return r2.next_u64() ^ (c * 0x9e3779b97f4a7c15ULL);
}

}  // namespace seanet

#endif  // SEANET_NN_RNG_H_
