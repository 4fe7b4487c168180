/* Copyright 2026 The audiotext Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <limits>

#include "audiotext/autograd/ops.h"
#include "audiotext/error.h"
#include "ops_internal.h"

namespace audiotext::ag {
namespace {

using internal::RowMat;

struct ConvGeometry {
  std::size_t batch, in_ch, out_ch, height, width, kh, kw, pad_h, pad_w;
  std::size_t Patch() const { return in_ch * kh * kw; }
  std::size_t Pixels() const { return batch * height * width; }
};

// cols[(c*kh + ky)*kw + kx, (b*H + y)*W + x] = x[b, c, y + ky - pad_h, x + kx - pad_w].
void Im2Col(const ConvGeometry& g, const double* x, RowMat& cols) {
  cols.resize(static_cast<Eigen::Index>(g.Patch()), static_cast<Eigen::Index>(g.Pixels()));
  const std::size_t hw = g.height * g.width;
  for (std::size_t c = 0; c < g.in_ch; ++c) {
    for (std::size_t ky = 0; ky < g.kh; ++ky) {
      for (std::size_t kx = 0; kx < g.kw; ++kx) {
        double* row = cols.data() + ((c * g.kh + ky) * g.kw + kx) * g.Pixels();
        for (std::size_t b = 0; b < g.batch; ++b) {
          const double* plane = x + (b * g.in_ch + c) * hw;
          double* dst = row + b * hw;
          for (std::size_t y = 0; y < g.height; ++y) {
            const std::ptrdiff_t sy = static_cast<std::ptrdiff_t>(y + ky) -
                                      static_cast<std::ptrdiff_t>(g.pad_h);
            double* drow = dst + y * g.width;
            if (sy < 0 || sy >= static_cast<std::ptrdiff_t>(g.height)) {
              std::fill_n(drow, g.width, 0.0);
              continue;
            }
            const double* srow = plane + static_cast<std::size_t>(sy) * g.width;
            for (std::size_t xx = 0; xx < g.width; ++xx) {
              const std::ptrdiff_t sx = static_cast<std::ptrdiff_t>(xx + kx) -
                                        static_cast<std::ptrdiff_t>(g.pad_w);
              drow[xx] = (sx < 0 || sx >= static_cast<std::ptrdiff_t>(g.width))
                             ? 0.0
                             : srow[static_cast<std::size_t>(sx)];
            }
          }
        }
      }
    }
  }
}

void Col2ImAdd(const ConvGeometry& g, const RowMat& cols, double* dx) {
  const std::size_t hw = g.height * g.width;
  for (std::size_t c = 0; c < g.in_ch; ++c) {
    for (std::size_t ky = 0; ky < g.kh; ++ky) {
      for (std::size_t kx = 0; kx < g.kw; ++kx) {
        const double* row = cols.data() + ((c * g.kh + ky) * g.kw + kx) * g.Pixels();
        for (std::size_t b = 0; b < g.batch; ++b) {
          double* plane = dx + (b * g.in_ch + c) * hw;
          const double* src = row + b * hw;
          for (std::size_t y = 0; y < g.height; ++y) {
            const std::ptrdiff_t sy = static_cast<std::ptrdiff_t>(y + ky) -
                                      static_cast<std::ptrdiff_t>(g.pad_h);
            if (sy < 0 || sy >= static_cast<std::ptrdiff_t>(g.height)) continue;
            double* drow = plane + static_cast<std::size_t>(sy) * g.width;
            const double* srow = src + y * g.width;
            for (std::size_t xx = 0; xx < g.width; ++xx) {
              const std::ptrdiff_t sx = static_cast<std::ptrdiff_t>(xx + kx) -
                                        static_cast<std::ptrdiff_t>(g.pad_w);
              if (sx < 0 || sx >= static_cast<std::ptrdiff_t>(g.width)) continue;
              drow[static_cast<std::size_t>(sx)] += srow[xx];
            }
          }
        }
      }
    }
  }
}

}  // namespace

Tensor Conv2d(const Tensor& x, const Tensor& weight, const Tensor& bias) {
  if (x.rank() != 4 || weight.rank() != 4 || bias.rank() != 1 || x.dim(1) != weight.dim(1) ||
      bias.dim(0) != weight.dim(0) || weight.dim(2) % 2 == 0 || weight.dim(3) % 2 == 0) {
    internal::ThrowShape("Conv2d", "input " + ShapeString(x.shape()) + ", weight " +
                                       ShapeString(weight.shape()) + ", bias " +
                                       ShapeString(bias.shape()));
  }
  const ConvGeometry g{x.dim(0),      x.dim(1),         weight.dim(0),
                       x.dim(2),      x.dim(3),                      weight.dim(2),
                       weight.dim(3), weight.dim(2) / 2,             weight.dim(3) / 2};
  const auto patch = static_cast<Eigen::Index>(g.Patch());
  const auto pixels = static_cast<Eigen::Index>(g.Pixels());
  const auto oc = static_cast<Eigen::Index>(g.out_ch);
  RowMat cols;
  Im2Col(g, x.impl()->data.data(), cols);
  const RowMat prod = internal::AsMatrix(weight.impl()->data, oc, patch) * cols;

  const std::size_t hw = g.height * g.width;
  std::vector<double> out(g.batch * g.out_ch * hw);
  const auto& bv = bias.impl()->data;
  for (std::size_t b = 0; b < g.batch; ++b) {
    for (std::size_t o = 0; o < g.out_ch; ++o) {
      const double* src = prod.data() + o * g.Pixels() + b * hw;
      double* dst = out.data() + (b * g.out_ch + o) * hw;
      for (std::size_t i = 0; i < hw; ++i) dst[i] = src[i] + bv[o];
    }
  }
  const bool rec = ShouldRecord({&x, &weight, &bias});
  Tensor result = MakeResult({g.batch, g.out_ch, g.height, g.width}, std::move(out), rec);
  CheckFinite("Conv2d", result);
  if (rec) {
    internal::RecordOp(result, [g, patch, pixels, oc, xi = x.shared_impl(),
                                wi = weight.shared_impl(), bi = bias.shared_impl(),
                                o = result.impl()] {
      const std::size_t hw = g.height * g.width;
      RowMat grad_mat(oc, pixels);
      for (std::size_t b = 0; b < g.batch; ++b) {
        for (std::size_t c = 0; c < g.out_ch; ++c) {
          std::copy_n(o->grad.data() + (b * g.out_ch + c) * hw, hw,
                      grad_mat.data() + c * g.Pixels() + b * hw);
        }
      }
      if (bi->requires_grad) {
        auto& gb = bi->GradBuffer();
        for (std::size_t c = 0; c < g.out_ch; ++c) gb[c] += grad_mat.row(static_cast<Eigen::Index>(c)).sum();
      }
      if (wi->requires_grad) {
        RowMat cols;
        Im2Col(g, xi->data.data(), cols);
        internal::AsMatrix(wi->GradBuffer(), oc, patch).noalias() += grad_mat * cols.transpose();
      }
      if (xi->requires_grad) {
        const RowMat dcols = internal::AsMatrix(wi->data, oc, patch).transpose() * grad_mat;
        Col2ImAdd(g, dcols, xi->GradBuffer().data());
      }
    });
  }
  return result;
}

Tensor MaxPool2d(const Tensor& x, std::size_t ph, std::size_t pw) {
  if (x.rank() != 4 || ph == 0 || pw == 0 || x.dim(2) < ph || x.dim(3) < pw) {
    internal::ThrowShape("MaxPool2d", "cannot pool " + ShapeString(x.shape()) + " with window (" +
                                          std::to_string(ph) + ", " + std::to_string(pw) + ")");
  }
  const std::size_t planes = x.dim(0) * x.dim(1);
  const std::size_t h = x.dim(2), w = x.dim(3);
  const std::size_t oh = h / ph, ow = w / pw;
  std::vector<double> out(planes * oh * ow);
  std::vector<std::size_t> argmax(out.size());
  const auto& in = x.impl()->data;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < planes; ++p) {
    const double* plane = in.data() + p * h * w;
    for (std::size_t oy = 0; oy < oh; ++oy) {
      for (std::size_t ox = 0; ox < ow; ++ox) {
        double best = -std::numeric_limits<double>::infinity();
        double second = best;
        std::size_t best_idx = (oy * ph) * w + ox * pw;
        for (std::size_t dy = 0; dy < ph; ++dy) {
          for (std::size_t dx = 0; dx < pw; ++dx) {
            const std::size_t idx = (oy * ph + dy) * w + ox * pw + dx;
            if (plane[idx] > best) {
              second = best;
              best = plane[idx];
              best_idx = idx;
            } else if (plane[idx] < best) {
              second = std::max(second, plane[idx]);
            }
          }
        }
        // Exact ties come from clamped inputs whose kinks are reported upstream.
        min_gap = std::min(min_gap, best - second);
        const std::size_t o = (p * oh + oy) * ow + ox;
        out[o] = best;
        argmax[o] = p * h * w + best_idx;
      }
    }
  }
  ReportKinkDistance(min_gap);
  const bool rec = ShouldRecord({&x});
  Tensor result = MakeResult({x.dim(0), x.dim(1), oh, ow}, std::move(out), rec);
  CheckFinite("MaxPool2d", result);
  if (rec) {
    internal::RecordOp(result, [argmax = std::move(argmax), xi = x.shared_impl(),
                                o = result.impl()] {
      if (!xi->requires_grad) return;
      auto& gx = xi->GradBuffer();
      for (std::size_t i = 0; i < argmax.size(); ++i) gx[argmax[i]] += o->grad[i];
    });
  }
  return result;
}

}  // namespace audiotext::ag
