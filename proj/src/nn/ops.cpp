// src/nn/ops.cpp

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

// Convolutions run as im2col + single-threaded BLAS GEMM, parallelized over
// batch items. Weight/bias gradients accumulate into per-item partials that
// are reduced in batch order, so results are bitwise independent of the
// worker count.

#include "nn/ops.h"

#include <cblas.h>

#include <cmath>
#include <cstring>

#include "common/error.h"
#include "nn/parallel.h"

namespace seanet::nn {

namespace {

// Unrolls x (Cin, T) into col (Cin*K, Tcol): col[ci*K + k, t] =
// x[ci, t*stride + k*dilation - pad_left], zero outside [0, T).
void im2col(const float* x, int cin, int t_img, int kernel, int stride,
            int dilation, int pad_left, int t_col, float* col) {
  for (int ci = 0; ci < cin; ++ci) {
    const float* xr = x + static_cast<int64_t>(ci) * t_img;
    for (int k = 0; k < kernel; ++k) {
      float* cr = col + (static_cast<int64_t>(ci) * kernel + k) * t_col;
      const int off = k * dilation - pad_left;
      int t_lo = off < 0 ? (-off + stride - 1) / stride : 0;
      int t_hi = t_img - off <= 0 ? 0 : (t_img - off + stride - 1) / stride;
      if (t_hi > t_col) t_hi = t_col;
      if (t_lo > t_col) t_lo = t_col;
      std::memset(cr, 0, sizeof(float) * t_lo);
      if (stride == 1) {
        if (t_hi > t_lo)
          std::memcpy(cr + t_lo, xr + t_lo + off,
                      sizeof(float) * (t_hi - t_lo));
      } else {
        for (int t = t_lo; t < t_hi; ++t) cr[t] = xr[t * stride + off];
      }
      if (t_col > t_hi) std::memset(cr + t_hi, 0, sizeof(float) * (t_col - t_hi));
    }
  }
}

// Scatter-add inverse of im2col.
void col2im_add(const float* col, int cin, int t_img, int kernel, int stride,
                int dilation, int pad_left, int t_col, float* x) {
  for (int ci = 0; ci < cin; ++ci) {
    float* xr = x + static_cast<int64_t>(ci) * t_img;
    for (int k = 0; k < kernel; ++k) {
      const float* cr = col + (static_cast<int64_t>(ci) * kernel + k) * t_col;
      const int off = k * dilation - pad_left;
      int t_lo = off < 0 ? (-off + stride - 1) / stride : 0;
      int t_hi = t_img - off <= 0 ? 0 : (t_img - off + stride - 1) / stride;
      if (t_hi > t_col) t_hi = t_col;
      if (t_lo > t_col) t_lo = t_col;
      if (stride == 1) {
        float* xd = xr + t_lo + off;
        for (int t = t_lo; t < t_hi; ++t) xd[t - t_lo] += cr[t];
      } else {
        for (int t = t_lo; t < t_hi; ++t) xr[t * stride + off] += cr[t];
      }
    }
  }
}

void sgemm(bool trans_a, bool trans_b, int m, int n, int k, const float* a,
           int lda, const float* b, int ldb, float beta, float* c, int ldc) {
  cblas_sgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, 1.0f, a, lda, b,
              ldb, beta, c, ldc);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Reduces per-batch-item gradient partials in batch order.
void reduce_partials(const std::vector<std::vector<float>>& parts,
                     float* dst) {
  for (const auto& p : parts)
    for (size_t i = 0; i < p.size(); ++i) dst[i] += p[i];
}

}  // namespace

Tensor conv1d(Tape& tape, const Tensor& x, const Tensor& w, const Tensor& bias,
              const ConvGeom& geom) {
  const Shape xs = x.shape();
  const int B = xs.b, Ci = xs.c, T = xs.t;
  const int K = geom.kernel, S = geom.stride, D = geom.dilation,
            G = geom.groups;
  SEANET_CHECK(Ci % G == 0, ErrorCategory::kShape,
               "conv1d: input channels not divisible by groups");
  const int cig = Ci / G;
  const int Co = w.shape().c;
  SEANET_CHECK(Co % G == 0, ErrorCategory::kShape,
               "conv1d: output channels not divisible by groups");
  SEANET_CHECK(w.shape().t == cig * K, ErrorCategory::kShape,
               "conv1d: weight shape mismatch");
  const int cog = Co / G;

  const int Tout = ceil_div(T, S);
  const int keff = (K - 1) * D + 1;
  int pad_total = (Tout - 1) * S + keff - T;
  if (pad_total < 0) pad_total = 0;
  const int pad_left = pad_total / 2;
  const bool plain = K == 1 && S == 1 && D == 1;  // col matrix == x

  const bool has_bias = bias.defined();
  const bool any_grad =
      x.needs_grad() || w.needs_grad() || (has_bias && bias.needs_grad());
  Tensor y = Tensor::zeros({B, Co, Tout}, any_grad);

  parallel_tasks(B, [&](int b) {
    const float* xb = x.data() + static_cast<int64_t>(b) * Ci * T;
    float* yb = y.data() + static_cast<int64_t>(b) * Co * Tout;
    std::vector<float> col;
    const float* col_ptr = xb;
    if (!plain) {
      col.resize(static_cast<size_t>(Ci) * K * Tout);
      im2col(xb, Ci, T, K, S, D, pad_left, Tout, col.data());
      col_ptr = col.data();
    }
    for (int g = 0; g < G; ++g) {
      sgemm(false, false, cog, Tout, cig * K,
            w.data() + static_cast<int64_t>(g) * cog * cig * K, cig * K,
            col_ptr + static_cast<int64_t>(g) * cig * K * Tout, Tout, 0.0f,
            yb + static_cast<int64_t>(g) * cog * Tout, Tout);
    }
    if (has_bias) {
      for (int co = 0; co < Co; ++co) {
        const float bv = bias.data()[co];
        float* yr = yb + static_cast<int64_t>(co) * Tout;
        for (int t = 0; t < Tout; ++t) yr[t] += bv;
      }
    }
  });

  if (any_grad) {
    Tensor xc = x, wc = w, bc = bias, yc = y;
    tape.record([=]() mutable {
      const bool need_dw = wc.needs_grad();
      const bool need_dx = xc.needs_grad();
      const bool need_db = bc.defined() && bc.needs_grad();
      std::vector<std::vector<float>> dw_part(need_dw ? B : 0);
      std::vector<std::vector<float>> db_part(need_db ? B : 0);
      parallel_tasks(B, [&](int b) {
        const float* dyb = yc.grad() + static_cast<int64_t>(b) * Co * Tout;
        const float* xb = xc.data() + static_cast<int64_t>(b) * Ci * T;
        if (need_dw) {
          std::vector<float> col;
          const float* col_ptr = xb;
          if (!plain) {
            col.resize(static_cast<size_t>(Ci) * K * Tout);
            im2col(xb, Ci, T, K, S, D, pad_left, Tout, col.data());
            col_ptr = col.data();
          }
          dw_part[static_cast<size_t>(b)]
              .resize(static_cast<size_t>(Co) * cig * K);
          for (int g = 0; g < G; ++g) {
            sgemm(false, true, cog, cig * K, Tout,
                  dyb + static_cast<int64_t>(g) * cog * Tout, Tout,
                  col_ptr + static_cast<int64_t>(g) * cig * K * Tout, Tout,
                  0.0f,
                  dw_part[static_cast<size_t>(b)].data() +
                      static_cast<int64_t>(g) * cog * cig * K,
                  cig * K);
          }
        }
        if (need_db) {
          db_part[static_cast<size_t>(b)].resize(static_cast<size_t>(Co));
          for (int co = 0; co < Co; ++co) {
            const float* dyr = dyb + static_cast<int64_t>(co) * Tout;
            double acc = 0.0;
            for (int t = 0; t < Tout; ++t) acc += dyr[t];
            db_part[static_cast<size_t>(b)][static_cast<size_t>(co)] =
                static_cast<float>(acc);
          }
        }
        if (need_dx) {
          float* dxb = xc.grad() + static_cast<int64_t>(b) * Ci * T;
          if (plain) {
            for (int g = 0; g < G; ++g) {
              sgemm(true, false, cig, Tout, cog,
                    wc.data() + static_cast<int64_t>(g) * cog * cig, cig,
                    dyb + static_cast<int64_t>(g) * cog * Tout, Tout, 1.0f,
                    dxb + static_cast<int64_t>(g) * cig * Tout, Tout);
            }
          } else {
            std::vector<float> dcol(static_cast<size_t>(Ci) * K * Tout);
            for (int g = 0; g < G; ++g) {
              sgemm(true, false, cig * K, Tout, cog,
                    wc.data() + static_cast<int64_t>(g) * cog * cig * K,
                    cig * K, dyb + static_cast<int64_t>(g) * cog * Tout, Tout,
                    0.0f,
                    dcol.data() + static_cast<int64_t>(g) * cig * K * Tout,
                    Tout);
            }
            col2im_add(dcol.data(), Ci, T, K, S, D, pad_left, Tout, dxb);
          }
        }
      });
      if (need_dw) reduce_partials(dw_part, wc.grad());
      if (need_db) reduce_partials(db_part, bc.grad());
    });
  }
  return y;
}

Tensor conv1d_transpose(Tape& tape, const Tensor& x, const Tensor& w,
                        const Tensor& bias, int out_channels, int kernel,
                        int stride) {
  const Shape xs = x.shape();
  const int B = xs.b, Ci = xs.c, Tin = xs.t;
  const int Co = out_channels, K = kernel, S = stride;
  SEANET_CHECK(K >= S, ErrorCategory::kShape,
               "conv1d_transpose: kernel must be >= stride");
  SEANET_CHECK(w.shape().c == Ci && w.shape().t == Co * K,
               ErrorCategory::kShape, "conv1d_transpose: weight shape mismatch");
  const int Tout = Tin * S;
  const int crop_left = (K - S) / 2;

  const bool has_bias = bias.defined();
  const bool any_grad =
      x.needs_grad() || w.needs_grad() || (has_bias && bias.needs_grad());
  Tensor y = Tensor::zeros({B, Co, Tout}, any_grad);

  parallel_tasks(B, [&](int b) {
    const float* xb = x.data() + static_cast<int64_t>(b) * Ci * Tin;
    float* yb = y.data() + static_cast<int64_t>(b) * Co * Tout;
    std::vector<float> coly(static_cast<size_t>(Co) * K * Tin);
    // coly (Co*K, Tin) = w^T (Co*K, Ci) * x (Ci, Tin)
    sgemm(true, false, Co * K, Tin, Ci, w.data(), Co * K, xb, Tin, 0.0f,
          coly.data(), Tin);
    if (has_bias) {
      for (int co = 0; co < Co; ++co) {
        const float bv = bias.data()[co];
        float* yr = yb + static_cast<int64_t>(co) * Tout;
        for (int t = 0; t < Tout; ++t) yr[t] = bv;
      }
    }
    col2im_add(coly.data(), Co, Tout, K, S, 1, crop_left, Tin, yb);
  });

  if (any_grad) {
    Tensor xc = x, wc = w, bc = bias, yc = y;
    tape.record([=]() mutable {
      const bool need_dw = wc.needs_grad();
      const bool need_dx = xc.needs_grad();
      const bool need_db = bc.defined() && bc.needs_grad();
      std::vector<std::vector<float>> dw_part(need_dw ? B : 0);
      std::vector<std::vector<float>> db_part(need_db ? B : 0);
      parallel_tasks(B, [&](int b) {
        const float* dyb = yc.grad() + static_cast<int64_t>(b) * Co * Tout;
        std::vector<float> dcoly(static_cast<size_t>(Co) * K * Tin);
        im2col(dyb, Co, Tout, K, S, 1, crop_left, Tin, dcoly.data());
        if (need_dx) {
          sgemm(false, false, Ci, Tin, Co * K, wc.data(), Co * K,
                dcoly.data(), Tin, 1.0f,
                xc.grad() + static_cast<int64_t>(b) * Ci * Tin, Tin);
        }
        if (need_dw) {
          dw_part[static_cast<size_t>(b)]
              .resize(static_cast<size_t>(Ci) * Co * K);
          sgemm(false, true, Ci, Co * K, Tin,
                xc.data() + static_cast<int64_t>(b) * Ci * Tin, Tin,
                dcoly.data(), Tin, 0.0f,
                dw_part[static_cast<size_t>(b)].data(), Co * K);
        }
        if (need_db) {
          db_part[static_cast<size_t>(b)].resize(static_cast<size_t>(Co));
          for (int co = 0; co < Co; ++co) {
            const float* dyr = dyb + static_cast<int64_t>(co) * Tout;
            double acc = 0.0;
            for (int t = 0; t < Tout; ++t) acc += dyr[t];
            db_part[static_cast<size_t>(b)][static_cast<size_t>(co)] =
                static_cast<float>(acc);
          }
        }
      });
      if (need_dw) reduce_partials(dw_part, wc.grad());
      if (need_db) reduce_partials(db_part, bc.grad());
    });
  }
  return y;
}

Tensor weight_norm(Tape& tape, const Tensor& v, const Tensor& g, int rows) {
  const int64_t n = v.numel();
  SEANET_CHECK(rows > 0 && n % rows == 0, ErrorCategory::kShape,
               "weight_norm: rows must divide element count");
  SEANET_CHECK(g.numel() == rows, ErrorCategory::kShape,
               "weight_norm: gain size mismatch");
  const int64_t cols = n / rows;

  const bool any_grad = v.needs_grad() || g.needs_grad();
  Tensor w = Tensor::zeros(v.shape(), any_grad);
  std::vector<float> norms(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    const float* vr = v.data() + r * cols;
    double acc = 0.0;
    for (int64_t i = 0; i < cols; ++i) acc += double(vr[i]) * vr[i];
    float nr = static_cast<float>(std::sqrt(acc));
    if (nr < 1e-12f) nr = 1e-12f;
    norms[static_cast<size_t>(r)] = nr;
    const float s = g.data()[r] / nr;
    float* wr = w.data() + r * cols;
    for (int64_t i = 0; i < cols; ++i) wr[i] = s * vr[i];
  }

  if (any_grad) {
    Tensor vc = v, gc = g, wc = w;
    tape.record([=]() mutable {
      for (int r = 0; r < rows; ++r) {
        const float* vr = vc.data() + r * cols;
        const float* dwr = wc.grad() + r * cols;
        const float nr = norms[static_cast<size_t>(r)];
        double dot = 0.0;  // dw . v
        for (int64_t i = 0; i < cols; ++i) dot += double(dwr[i]) * vr[i];
        if (gc.needs_grad()) gc.grad()[r] += static_cast<float>(dot / nr);
        if (vc.needs_grad()) {
          const float gr = gc.data()[r];
          const float a = gr / nr;
          const float bq =
              static_cast<float>(gr * dot / (double(nr) * nr * nr));
          float* dvr = vc.grad() + r * cols;
          for (int64_t i = 0; i < cols; ++i) dvr[i] += a * dwr[i] - bq * vr[i];
        }
      }
    });
  }
  return w;
}

Tensor elu(Tape& tape, const Tensor& x) {
  Tensor y = Tensor::zeros(x.shape(), x.needs_grad());
  const float* xp = x.data();
  float* yp = y.data();
  const int64_t n = x.numel();
  parallel_range(n, [&](int64_t lo, int64_t hi) {
    for (int64_t i = lo; i < hi; ++i)
      yp[i] = xp[i] > 0.0f ? xp[i] : std::expm1(xp[i]);
  });
  if (x.needs_grad()) {
    Tensor xc = x, yc = y;
    tape.record([=]() mutable {
      const float* xv = xc.data();
      const float* yv = yc.data();
      const float* dy = yc.grad();
      float* dx = xc.grad();
      parallel_range(n, [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i)
          dx[i] += dy[i] * (xv[i] > 0.0f ? 1.0f : yv[i] + 1.0f);
      });
    });
  }
  return y;
}

Tensor leaky_relu(Tape& tape, const Tensor& x, float slope) {
  Tensor y = Tensor::zeros(x.shape(), x.needs_grad());
  const float* xp = x.data();
  float* yp = y.data();
  const int64_t n = x.numel();
  parallel_range(n, [&](int64_t lo, int64_t hi) {
    for (int64_t i = lo; i < hi; ++i)
      yp[i] = xp[i] > 0.0f ? xp[i] : slope * xp[i];
  });
  if (x.needs_grad()) {
    Tensor xc = x, yc = y;
    tape.record([=]() mutable {
      const float* xv = xc.data();
      const float* dy = yc.grad();
      float* dx = xc.grad();
      parallel_range(n, [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i)
          dx[i] += dy[i] * (xv[i] > 0.0f ? 1.0f : slope);
      });
    });
  }
  return y;
}

Tensor tanh_op(Tape& tape, const Tensor& x) {
  Tensor y = Tensor::zeros(x.shape(), x.needs_grad());
  const float* xp = x.data();
  float* yp = y.data();
  const int64_t n = x.numel();
  parallel_range(n, [&](int64_t lo, int64_t hi) {
    for (int64_t i = lo; i < hi; ++i) yp[i] = std::tanh(xp[i]);
  });
  if (x.needs_grad()) {
    Tensor xc = x, yc = y;
    tape.record([=]() mutable {
      const float* yv = yc.data();
      const float* dy = yc.grad();
      float* dx = xc.grad();
      parallel_range(n, [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i)
          dx[i] += dy[i] * (1.0f - yv[i] * yv[i]);
      });
    });
  }
  return y;
}

Tensor add(Tape& tape, const Tensor& a, const Tensor& b) {
  SEANET_CHECK(a.shape() == b.shape(), ErrorCategory::kShape,
               "add: shape mismatch " + a.shape().str() + " vs " +
                   b.shape().str());
  const bool any_grad = a.needs_grad() || b.needs_grad();
  Tensor y = Tensor::zeros(a.shape(), any_grad);
  const int64_t n = a.numel();
  const float* ap = a.data();
  const float* bp = b.data();
  float* yp = y.data();
  parallel_range(n, [&](int64_t lo, int64_t hi) {
    for (int64_t i = lo; i < hi; ++i) yp[i] = ap[i] + bp[i];
  });
  if (any_grad) {
    Tensor ac = a, bc = b, yc = y;
    tape.record([=]() mutable {
      const float* dy = yc.grad();
      parallel_range(n, [&](int64_t lo, int64_t hi) {
        if (ac.needs_grad()) {
          float* da = ac.grad();
          for (int64_t i = lo; i < hi; ++i) da[i] += dy[i];
        }
        if (bc.needs_grad()) {
          float* db = bc.grad();
          for (int64_t i = lo; i < hi; ++i) db[i] += dy[i];
        }
      });
    });
  }
  return y;
}

Tensor concat_channels(Tape& tape, const Tensor& a, const Tensor& b) {
  const Shape as = a.shape(), bs = b.shape();
  SEANET_CHECK(as.b == bs.b && as.t == bs.t, ErrorCategory::kShape,
               "concat_channels: batch/time mismatch");
  const bool any_grad = a.needs_grad() || b.needs_grad();
  Tensor y = Tensor::zeros({as.b, as.c + bs.c, as.t}, any_grad);
  const int64_t rowa = static_cast<int64_t>(as.c) * as.t;
  const int64_t rowb = static_cast<int64_t>(bs.c) * bs.t;
  for (int bt = 0; bt < as.b; ++bt) {
    float* yb = y.data() + static_cast<int64_t>(bt) * (rowa + rowb);
    std::memcpy(yb, a.data() + bt * rowa, sizeof(float) * rowa);
    std::memcpy(yb + rowa, b.data() + bt * rowb, sizeof(float) * rowb);
  }
  if (any_grad) {
    Tensor ac = a, bc = b, yc = y;
    tape.record([=]() mutable {
      for (int bt = 0; bt < as.b; ++bt) {
        const float* dyb = yc.grad() + static_cast<int64_t>(bt) * (rowa + rowb);
        if (ac.needs_grad()) {
          float* da = ac.grad() + bt * rowa;
          for (int64_t i = 0; i < rowa; ++i) da[i] += dyb[i];
        }
        if (bc.needs_grad()) {
          float* db = bc.grad() + bt * rowb;
          for (int64_t i = 0; i < rowb; ++i) db[i] += dyb[rowa + i];
        }
      }
    });
  }
  return y;
}

Tensor avg_pool_4_2_1(Tape& tape, const Tensor& x) {
  const Shape xs = x.shape();
  const int B = xs.b, C = xs.c, T = xs.t;
  const int K = 4, S = 2, P = 1;
  const int Tout = (T + 2 * P - K) / S + 1;
  SEANET_CHECK(Tout > 0, ErrorCategory::kShape, "avg_pool: input too short");
  Tensor y = Tensor::zeros({B, C, Tout}, x.needs_grad());
  parallel_tasks(B, [&](int b) {
    for (int c = 0; c < C; ++c) {
      const float* xr = x.data() + (static_cast<int64_t>(b) * C + c) * T;
      float* yr = y.data() + (static_cast<int64_t>(b) * C + c) * Tout;
      for (int t = 0; t < Tout; ++t) {
        int lo = t * S - P;
        int hi = lo + K;
        if (lo < 0) lo = 0;
        if (hi > T) hi = T;
        float acc = 0.0f;
        for (int i = lo; i < hi; ++i) acc += xr[i];
        yr[t] = acc / static_cast<float>(hi - lo);
      }
    }
  });
  if (x.needs_grad()) {
    Tensor xc = x, yc = y;
    tape.record([=]() mutable {
      parallel_tasks(B, [&](int b) {
        for (int c = 0; c < C; ++c) {
          float* dxr = xc.grad() + (static_cast<int64_t>(b) * C + c) * T;
          const float* dyr =
              yc.grad() + (static_cast<int64_t>(b) * C + c) * Tout;
          for (int t = 0; t < Tout; ++t) {
            int lo = t * S - P;
            int hi = lo + K;
            if (lo < 0) lo = 0;
            if (hi > T) hi = T;
            const float gv = dyr[t] / static_cast<float>(hi - lo);
            for (int i = lo; i < hi; ++i) dxr[i] += gv;
          }
        }
      });
    });
  }
  return y;
}

Tensor layer_norm_channels(Tape& tape, const Tensor& x, const Tensor& gamma,
                           const Tensor& beta, float eps) {
  const Shape xs = x.shape();
  const int B = xs.b, C = xs.c, T = xs.t;
  SEANET_CHECK(gamma.numel() == C && beta.numel() == C, ErrorCategory::kShape,
               "layer_norm: affine parameter size mismatch");
  const bool any_grad =
      x.needs_grad() || gamma.needs_grad() || beta.needs_grad();
  Tensor y = Tensor::zeros(xs, any_grad);
  auto stats = std::make_shared<std::vector<float>>(
      static_cast<size_t>(B) * T * 2);  // (mean, inv_std) per (b, t)
  parallel_tasks(B, [&](int b) {
    const float* xb = x.data() + static_cast<int64_t>(b) * C * T;
    float* yb = y.data() + static_cast<int64_t>(b) * C * T;
    for (int t = 0; t < T; ++t) {
      double mu = 0.0;
      for (int c = 0; c < C; ++c) mu += xb[static_cast<int64_t>(c) * T + t];
      mu /= C;
      double var = 0.0;
      for (int c = 0; c < C; ++c) {
        const double d = xb[static_cast<int64_t>(c) * T + t] - mu;
        var += d * d;
      }
      var /= C;
      const float inv = static_cast<float>(1.0 / std::sqrt(var + eps));
      (*stats)[(static_cast<size_t>(b) * T + t) * 2] = static_cast<float>(mu);
      (*stats)[(static_cast<size_t>(b) * T + t) * 2 + 1] = inv;
      for (int c = 0; c < C; ++c) {
        const float xh =
            (xb[static_cast<int64_t>(c) * T + t] - static_cast<float>(mu)) *
            inv;
        yb[static_cast<int64_t>(c) * T + t] =
            gamma.data()[c] * xh + beta.data()[c];
      }
    }
  });
  if (any_grad) {
    Tensor xc = x, gc = gamma, bc = beta, yc = y;
    tape.record([=]() mutable {
      const bool need_dg = gc.needs_grad();
      const bool need_dbt = bc.needs_grad();
      std::vector<std::vector<float>> dg_part(need_dg ? B : 0);
      std::vector<std::vector<float>> db_part(need_dbt ? B : 0);
      parallel_tasks(B, [&](int b) {
        const float* xb = xc.data() + static_cast<int64_t>(b) * C * T;
        const float* dyb = yc.grad() + static_cast<int64_t>(b) * C * T;
        float* dgb = nullptr;
        float* dbb = nullptr;
        if (need_dg) {
          dg_part[static_cast<size_t>(b)].resize(static_cast<size_t>(C));
          dgb = dg_part[static_cast<size_t>(b)].data();
        }
        if (need_dbt) {
          db_part[static_cast<size_t>(b)].resize(static_cast<size_t>(C));
          dbb = db_part[static_cast<size_t>(b)].data();
        }
        for (int t = 0; t < T; ++t) {
          const float mu = (*stats)[(static_cast<size_t>(b) * T + t) * 2];
          const float inv = (*stats)[(static_cast<size_t>(b) * T + t) * 2 + 1];
          double sum_gdy = 0.0, sum_gdy_xh = 0.0;
          for (int c = 0; c < C; ++c) {
            const int64_t idx = static_cast<int64_t>(c) * T + t;
            const float xh = (xb[idx] - mu) * inv;
            const float gdy = gc.data()[c] * dyb[idx];
            sum_gdy += gdy;
            sum_gdy_xh += double(gdy) * xh;
            if (dgb) dgb[c] += dyb[idx] * xh;
            if (dbb) dbb[c] += dyb[idx];
          }
          if (xc.needs_grad()) {
            const float m1 = static_cast<float>(sum_gdy / C);
            const float m2 = static_cast<float>(sum_gdy_xh / C);
            float* dxb = xc.grad() + static_cast<int64_t>(b) * C * T;
            for (int c = 0; c < C; ++c) {
              const int64_t idx = static_cast<int64_t>(c) * T + t;
              const float xh = (xb[idx] - mu) * inv;
              dxb[idx] += (gc.data()[c] * dyb[idx] - m1 - xh * m2) * inv;
            }
          }
        }
      });
      if (need_dg) reduce_partials(dg_part, gc.grad());
      if (need_dbt) reduce_partials(db_part, bc.grad());
    });
  }
  return y;
}

Tensor hinge_mean(Tape& tape, const Tensor& x, float sign) {
  const int64_t n = x.numel();
  double acc = 0.0;
  const float* xp = x.data();
  for (int64_t i = 0; i < n; ++i) {
    const double v = 1.0 - double(sign) * xp[i];
    if (v > 0.0) acc += v;
  }
  Tensor y = Tensor::zeros({1, 1, 1}, x.needs_grad());
  y.data()[0] = static_cast<float>(acc / n);
  if (x.needs_grad()) {
    Tensor xc = x, yc = y;
    tape.record([=]() mutable {
      const float dy = yc.grad()[0];
      const float* xv = xc.data();
      float* dx = xc.grad();
      const float gv = -sign / static_cast<float>(n) * dy;
      for (int64_t i = 0; i < n; ++i)
        if (1.0f - sign * xv[i] > 0.0f) dx[i] += gv;
    });
  }
  return y;
}

Tensor mean_abs_diff(Tape& tape, const Tensor& a, const Tensor& b) {
  SEANET_CHECK(a.shape() == b.shape(), ErrorCategory::kShape,
               "mean_abs_diff: shape mismatch " + a.shape().str() + " vs " +
                   b.shape().str());
  const int64_t n = a.numel();
  double acc = 0.0;
  const float* ap = a.data();
  const float* bp = b.data();
  for (int64_t i = 0; i < n; ++i) acc += std::fabs(double(ap[i]) - bp[i]);
  const bool any_grad = a.needs_grad() || b.needs_grad();
  Tensor y = Tensor::zeros({1, 1, 1}, any_grad);
  y.data()[0] = static_cast<float>(acc / n);
  if (any_grad) {
    Tensor ac = a, bc = b, yc = y;
    tape.record([=]() mutable {
      const float dy = yc.grad()[0] / static_cast<float>(n);
      const float* av = ac.data();
      const float* bv = bc.data();
      for (int64_t i = 0; i < n; ++i) {
        const float d = av[i] - bv[i];
        const float s = d > 0.0f ? 1.0f : (d < 0.0f ? -1.0f : 0.0f);
        if (ac.needs_grad()) ac.grad()[i] += s * dy;
        if (bc.needs_grad()) bc.grad()[i] -= s * dy;
      }
    });
  }
  return y;
}

Tensor scalar_comb(Tape& tape,
                   const std::vector<std::pair<float, Tensor>>& terms) {
  bool any_grad = false;
  double acc = 0.0;
  for (const auto& [c, s] : terms) {
    SEANET_CHECK(s.numel() == 1, ErrorCategory::kShape,
                 "scalar_comb: non-scalar term");
    acc += double(c) * s.data()[0];
    any_grad = any_grad || s.needs_grad();
  }
  Tensor y = Tensor::zeros({1, 1, 1}, any_grad);
  y.data()[0] = static_cast<float>(acc);
  if (any_grad) {
    auto terms_c = terms;
    Tensor yc = y;
    tape.record([=]() mutable {
      const float dy = yc.grad()[0];
      for (auto& [c, s] : terms_c)
        if (s.needs_grad()) s.grad()[0] += c * dy;
    });
  }
  return y;
}

Tensor dot_const(Tape& tape, const Tensor& x, std::vector<float> w) {
  SEANET_CHECK(static_cast<int64_t>(w.size()) == x.numel(),
               ErrorCategory::kShape, "dot_const: size mismatch");
  double acc = 0.0;
  const float* xp = x.data();
  for (size_t i = 0; i < w.size(); ++i) acc += double(w[i]) * xp[i];
  Tensor y = Tensor::zeros({1, 1, 1}, x.needs_grad());
  y.data()[0] = static_cast<float>(acc);
  if (x.needs_grad()) {
    Tensor xc = x, yc = y;
    auto wk = std::make_shared<std::vector<float>>(std::move(w));
    tape.record([=]() mutable {
      const float dy = yc.grad()[0];
      float* dx = xc.grad();
      for (size_t i = 0; i < wk->size(); ++i) dx[i] += (*wk)[i] * dy;
    });
  }
  return y;
}

}  // namespace seanet::nn
