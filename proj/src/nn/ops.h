// src/nn/ops.h

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

#ifndef SEANET_NN_OPS_H_
#define SEANET_NN_OPS_H_

#include <utility>
#include <vector>

#include "nn/tensor.h"

namespace seanet::nn {

// 1-D convolution geometry. Padding follows the "same" convention:
// T_out = ceil(T / stride), pads computed from the actual input length.
struct ConvGeom {
  int kernel = 1;
  int stride = 1;
  int dilation = 1;
  int groups = 1;
};

// x: (B, Cin, T); w: (Cout, Cin/groups, K) flattened row-major into a
// (1, Cout, Cin/groups*K) tensor; bias: (1, Cout, 1) or undefined.
Tensor conv1d(Tape& tape, const Tensor& x, const Tensor& w, const Tensor& bias,
              const ConvGeom& geom);

// Transposed convolution, stride upsampling: T_out = T * stride. Weight is
// (Cin, Cout, K) flattened into (1, Cin, Cout*K). Kernel must be >= stride;
// the surplus (kernel - stride) is cropped symmetrically.
Tensor conv1d_transpose(Tape& tape, const Tensor& x, const Tensor& w,
                        const Tensor& bias, int out_channels, int kernel,
                        int stride);

// Per-row weight normalization: rows are dim-0 slices of v (viewing v as
// (rows, cols)); w[r] = g[r] * v[r] / ||v[r]||.
Tensor weight_norm(Tape& tape, const Tensor& v, const Tensor& g, int rows);

Tensor elu(Tape& tape, const Tensor& x);
Tensor leaky_relu(Tape& tape, const Tensor& x, float slope);
Tensor tanh_op(Tape& tape, const Tensor& x);
Tensor add(Tape& tape, const Tensor& a, const Tensor& b);
Tensor concat_channels(Tape& tape, const Tensor& a, const Tensor& b);

// Average pooling with kernel 4, stride 2, pad 1; padding samples are
// excluded from the divisor.
Tensor avg_pool_4_2_1(Tape& tape, const Tensor& x);

// Layer normalization across channels, per (batch, time) position.
Tensor layer_norm_channels(Tape& tape, const Tensor& x, const Tensor& gamma,
                           const Tensor& beta, float eps = 1e-5f);

// mean over all elements of max(0, 1 - sign * x); the hinge subgradient at
// the kink is 0.
Tensor hinge_mean(Tape& tape, const Tensor& x, float sign);

// mean over all elements of |a - b|.
Tensor mean_abs_diff(Tape& tape, const Tensor& a, const Tensor& b);

// Scalar linear combination sum_i coeff_i * s_i of scalar tensors.
Tensor scalar_comb(Tape& tape,
                   const std::vector<std::pair<float, Tensor>>& terms);

// sum_i w[i] * x[i] as a scalar; w is a constant. Test/probe helper.
Tensor dot_const(Tape& tape, const Tensor& x, std::vector<float> w);

}  // namespace seanet::nn

#endif  // SEANET_NN_OPS_H_
