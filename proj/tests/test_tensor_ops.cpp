// tests/test_tensor_ops.cpp

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

#include <cmath>

#include "doctest.h"
#include "nn/ops.h"
#include "nn/rng.h"
#include "testutil.h"

using namespace seanet;
using namespace seanet::nn;
using seanet::test::check_input_gradient;

namespace {

Tensor random_tensor(Shape s, uint64_t seed, bool needs_grad,
                     float scale = 1.0f) {
  Tensor t = Tensor::zeros(s, needs_grad);
  Rng rng(seed);
  for (int64_t i = 0; i < t.numel(); ++i)
    t.data()[i] = rng.next_normal() * scale;
  return t;
}

// Reference direct convolution, "same" padding, no BLAS.
std::vector<float> conv_reference(const Tensor& x, const Tensor& w,
                                  const Tensor& b, const ConvGeom& g,
                                  int* out_t) {
  const int B = x.shape().b, Ci = x.shape().c, T = x.shape().t;
  const int Co = w.shape().c;
  const int cig = Ci / g.groups, cog = Co / g.groups;
  const int Tout = (T + g.stride - 1) / g.stride;
  const int keff = (g.kernel - 1) * g.dilation + 1;
  int pad_total = (Tout - 1) * g.stride + keff - T;
  if (pad_total < 0) pad_total = 0;
  const int pl = pad_total / 2;
  std::vector<float> y(static_cast<size_t>(B) * Co * Tout, 0.0f);
  for (int bb = 0; bb < B; ++bb)
    for (int co = 0; co < Co; ++co) {
      const int grp = co / cog;
      for (int t = 0; t < Tout; ++t) {
        double acc = b.defined() ? b.data()[co] : 0.0;
        for (int ic = 0; ic < cig; ++ic)
          for (int k = 0; k < g.kernel; ++k) {
            const int ti = t * g.stride + k * g.dilation - pl;
            if (ti < 0 || ti >= T) continue;
            acc += double(w.data()[(static_cast<int64_t>(co) * cig + ic) *
                                       g.kernel +
                                   k]) *
                   x.data()[(static_cast<int64_t>(bb) * Ci + grp * cig + ic) *
                                T +
                            ti];
          }
        y[(static_cast<size_t>(bb) * Co + co) * Tout + t] =
            static_cast<float>(acc);
      }
    }
  *out_t = Tout;
  return y;
}

}  // namespace

TEST_CASE("conv1d matches a direct reference implementation") {
  struct Case {
    int B, Ci, Co, T, k, s, d, g;
  };
  const Case cases[] = {
      {2, 3, 5, 17, 7, 1, 1, 1}, {1, 4, 6, 24, 4, 2, 1, 1},
      {2, 4, 8, 32, 16, 8, 1, 1}, {1, 5, 5, 19, 3, 1, 9, 1},
      {1, 8, 8, 20, 41, 4, 1, 4}, {2, 2, 2, 9, 1, 1, 1, 1},
  };
  for (const Case& c : cases) {
    CAPTURE(c.T);
    Tensor x = random_tensor({c.B, c.Ci, c.T}, 11, false);
    Tensor w = random_tensor({1, c.Co, c.Ci / c.g * c.k}, 12, false, 0.3f);
    Tensor b = random_tensor({1, c.Co, 1}, 13, false, 0.1f);
    Tape tape;
    Tensor y = conv1d(tape, x, w, b, {c.k, c.s, c.d, c.g});
    int tout = 0;
    std::vector<float> ref = conv_reference(x, w, b, {c.k, c.s, c.d, c.g}, &tout);
    REQUIRE(y.shape().t == tout);
    for (int64_t i = 0; i < y.numel(); ++i)
      CHECK(y.data()[i] == doctest::Approx(ref[static_cast<size_t>(i)])
                               .epsilon(1e-4));
  }
}

TEST_CASE("conv1d gradients agree with finite differences") {
  Tensor x = random_tensor({1, 3, 12}, 21, true);
  Tensor w = random_tensor({1, 6, 3 * 4}, 22, true, 0.4f);
  Tensor b = random_tensor({1, 6, 1}, 23, true, 0.1f);
  std::vector<float> probe;
  Rng rng(99);
  for (int i = 0; i < 6 * 6; ++i) probe.push_back(rng.next_normal());

  auto build_x = [&](Tape& t, Tensor& in) {
    Tensor y = conv1d(t, in, w.detached(), b.detached(), {4, 2, 1, 1});
    return dot_const(t, y, probe);
  };
  check_input_gradient(x, build_x);

  auto build_w = [&](Tape& t, Tensor& ww) {
    Tensor y = conv1d(t, x.detached(), ww, b.detached(), {4, 2, 1, 1});
    return dot_const(t, y, probe);
  };
  check_input_gradient(w, build_w);

  auto build_b = [&](Tape& t, Tensor& bb) {
    Tensor y = conv1d(t, x.detached(), w.detached(), bb, {4, 2, 1, 1});
    return dot_const(t, y, probe);
  };
  check_input_gradient(b, build_b);
}

TEST_CASE("conv1d_transpose doubles/eightfolds length and backprops") {
  for (int stride : {2, 8}) {
    const int Ci = 4, Co = 2, Tin = 6, K = 2 * stride;
    Tensor x = random_tensor({1, Ci, Tin}, 31, true);
    Tensor w = random_tensor({1, Ci, Co * K}, 32, true, 0.4f);
    Tensor b = random_tensor({1, Co, 1}, 33, true, 0.1f);
    Tape tape;
    Tensor y = conv1d_transpose(tape, x, w, b, Co, K, stride);
    CHECK(y.shape().t == Tin * stride);
    CHECK(y.shape().c == Co);

    std::vector<float> probe;
    Rng rng(98);
    for (int64_t i = 0; i < y.numel(); ++i) probe.push_back(rng.next_normal());
    auto build_x = [&](Tape& t, Tensor& in) {
      Tensor out = conv1d_transpose(t, in, w.detached(), b.detached(), Co, K,
                                    stride);
      return dot_const(t, out, probe);
    };
    check_input_gradient(x, build_x);
    auto build_w = [&](Tape& t, Tensor& ww) {
      Tensor out =
          conv1d_transpose(t, x.detached(), ww, b.detached(), Co, K, stride);
      return dot_const(t, out, probe);
    };
    check_input_gradient(w, build_w);
  }
}

TEST_CASE("transposed convolution is the adjoint of convolution") {
  // <conv(x), y> == <x, conv_transpose(y)> for matching geometry, zero bias.
  const int Ci = 3, Co = 2, T = 16, s = 2, K = 4;
  Tensor x = random_tensor({1, Ci, T}, 41, false);
  Tensor y = random_tensor({1, Co, T / s}, 42, false);
  Tensor w = random_tensor({1, Co, Ci * K}, 43, false, 0.5f);
  Tape tape;
  Tensor cx = conv1d(tape, x, w, Tensor(), {K, s, 1, 1});
  // The (Co, Ci*K) layout doubles as the (Cin=Co, Cout*K=Ci*K) transposed
  // layout, so the same tensor drives the adjoint.
  Tensor ty = conv1d_transpose(tape, y, w, Tensor(), Ci, K, s);
  REQUIRE(ty.shape().t == T);

  double lhs = 0.0, rhs = 0.0;
  for (int64_t i = 0; i < cx.numel(); ++i)
    lhs += double(cx.data()[i]) * y.data()[i];
  for (int64_t i = 0; i < ty.numel(); ++i)
    rhs += double(ty.data()[i]) * x.data()[i];
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-4));
}

TEST_CASE("weight_norm normalizes rows and backprops") {
  const int rows = 4, cols = 6;
  Tensor v = random_tensor({1, rows, cols}, 51, true);
  Tensor g = random_tensor({1, rows, 1}, 52, true, 0.5f);
  Tape tape;
  Tensor w = weight_norm(tape, v, g, rows);
  for (int r = 0; r < rows; ++r) {
    double norm = 0.0;
    for (int c = 0; c < cols; ++c) {
      const float wv = w.data()[r * cols + c];
      norm += double(wv) * wv;
    }
    CHECK(std::sqrt(norm) ==
          doctest::Approx(std::fabs(g.data()[r])).epsilon(1e-4));
  }

  std::vector<float> probe;
  Rng rng(97);
  for (int i = 0; i < rows * cols; ++i) probe.push_back(rng.next_normal());
  auto build_v = [&](Tape& t, Tensor& vv) {
    return dot_const(t, weight_norm(t, vv, g.detached(), rows), probe);
  };
  check_input_gradient(v, build_v);
  auto build_g = [&](Tape& t, Tensor& gg) {
    return dot_const(t, weight_norm(t, v.detached(), gg, rows), probe);
  };
  check_input_gradient(g, build_g);
}

TEST_CASE("layer_norm_channels normalizes each (batch, time) column") {
  const int B = 2, C = 5, T = 7;
  Tensor x = random_tensor({B, C, T}, 61, true, 2.0f);
  Tensor gamma = Tensor::zeros({1, C, 1}, true);
  Tensor beta = Tensor::zeros({1, C, 1}, true);
  for (int c = 0; c < C; ++c) gamma.data()[c] = 1.0f;
  Tape tape;
  Tensor y = layer_norm_channels(tape, x, gamma, beta);
  for (int b = 0; b < B; ++b)
    for (int t = 0; t < T; ++t) {
      double mu = 0.0, var = 0.0;
      for (int c = 0; c < C; ++c) mu += y.data()[(b * C + c) * T + t];
      mu /= C;
      for (int c = 0; c < C; ++c) {
        const double d = y.data()[(b * C + c) * T + t] - mu;
        var += d * d;
      }
      CHECK(mu == doctest::Approx(0.0).epsilon(1e-3));
      CHECK(var / C == doctest::Approx(1.0).epsilon(1e-2));
    }

  std::vector<float> probe;
  Rng rng(96);
  for (int i = 0; i < B * C * T; ++i) probe.push_back(rng.next_normal());
  auto build = [&](Tape& t, Tensor& in) {
    return dot_const(
        t, layer_norm_channels(t, in, gamma.detached(), beta.detached()),
        probe);
  };
  check_input_gradient(x, build, 5e-3f);
  auto build_gamma = [&](Tape& t, Tensor& gg) {
    return dot_const(t, layer_norm_channels(t, x.detached(), gg,
                                            beta.detached()),
                     probe);
  };
  check_input_gradient(gamma, build_gamma);
}

TEST_CASE("activations backprop") {
  Tensor x = random_tensor({1, 2, 9}, 71, true);
  std::vector<float> probe;
  Rng rng(95);
  for (int i = 0; i < 18; ++i) probe.push_back(rng.next_normal());

  auto build_elu = [&](Tape& t, Tensor& in) {
    return dot_const(t, elu(t, in), probe);
  };
  check_input_gradient(x, build_elu, 1e-3f);
  auto build_leaky = [&](Tape& t, Tensor& in) {
    return dot_const(t, leaky_relu(t, in, 0.3f), probe);
  };
  check_input_gradient(x, build_leaky, 1e-3f);
  auto build_tanh = [&](Tape& t, Tensor& in) {
    return dot_const(t, tanh_op(t, in), probe);
  };
  check_input_gradient(x, build_tanh, 1e-3f);
}

TEST_CASE("avg_pool_4_2_1 halves even lengths and backprops") {
  Tensor x = random_tensor({1, 3, 16}, 81, true);
  Tape tape;
  Tensor y = avg_pool_4_2_1(tape, x);
  CHECK(y.shape().t == 8);
  std::vector<float> probe;
  Rng rng(94);
  for (int64_t i = 0; i < y.numel(); ++i) probe.push_back(rng.next_normal());
  auto build = [&](Tape& t, Tensor& in) {
    return dot_const(t, avg_pool_4_2_1(t, in), probe);
  };
  check_input_gradient(x, build, 1e-3f);
}

TEST_CASE("concat and add route gradients to both inputs") {
  Tensor a = random_tensor({1, 2, 5}, 91, true);
  Tensor b = random_tensor({1, 3, 5}, 92, true);
  Tape tape;
  Tensor y = concat_channels(tape, a, b);
  CHECK(y.shape().c == 5);
  Tensor s = dot_const(tape, y, std::vector<float>(25, 1.0f));
  tape.backward(s);
  for (int64_t i = 0; i < a.numel(); ++i) CHECK(a.grad()[i] == 1.0f);
  for (int64_t i = 0; i < b.numel(); ++i) CHECK(b.grad()[i] == 1.0f);
}

TEST_CASE("tape composition: gradients flow across tapes") {
  // Mirrors the trainer: one tape builds y = f(x), a second builds loss(y);
  // backward on the second then run_reverse on the first.
  Tensor x = random_tensor({1, 1, 4}, 93, true);
  Tape t1;
  Tensor y = tanh_op(t1, x);
  Tape t2;
  Tensor loss = dot_const(t2, y, {1.0f, 2.0f, 3.0f, 4.0f});
  t2.backward(loss);
  t1.run_reverse();
  const float coeffs[] = {1.0f, 2.0f, 3.0f, 4.0f};
  for (int i = 0; i < 4; ++i) {
    const float yt = std::tanh(x.data()[i]);
    CHECK(x.grad()[i] ==
          doctest::Approx(coeffs[i] * (1.0f - yt * yt)).epsilon(1e-4));
  }
}
