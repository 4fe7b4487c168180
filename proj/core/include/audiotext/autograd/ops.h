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

#ifndef AUDIOTEXT_AUTOGRAD_OPS_H_
#define AUDIOTEXT_AUTOGRAD_OPS_H_

#include <optional>
#include <vector>

#include "audiotext/autograd/tensor.h"
#include "audiotext/rng.h"

namespace audiotext::ag {

// Elementwise binary ops. Shapes must match, or one operand's shape must be
// a suffix of the other's (it is then repeated over the leading dims).
Tensor Add(const Tensor& a, const Tensor& b);
Tensor Sub(const Tensor& a, const Tensor& b);
Tensor Mul(const Tensor& a, const Tensor& b);

Tensor ScalarMul(const Tensor& a, double s);
Tensor Relu(const Tensor& a);  // relu'(0) = 0
Tensor Abs(const Tensor& a);   // abs'(0) = 0

// While alive on this thread, tracks the smallest distance of any input of a
// piecewise-linear op (relu, abs, max-pool runner-up gap, L1 residual) to its
// non-differentiable point. Monitors do not nest.
class KinkMonitor {
 public:
  KinkMonitor();
  ~KinkMonitor();
  KinkMonitor(const KinkMonitor&) = delete;
  KinkMonitor& operator=(const KinkMonitor&) = delete;

  double min_distance() const { return min_distance_; }

 private:
  friend void ReportKinkDistance(double distance);
  double min_distance_;
};

// No-op without an active monitor.
void ReportKinkDistance(double distance);

// Full reductions to a scalar (shape []).
Tensor Sum(const Tensor& a);
Tensor Mean(const Tensor& a);

// Mean over one axis; the axis is removed from the shape.
Tensor MeanAxis(const Tensor& a, std::size_t axis);

Tensor Reshape(const Tensor& a, Shape shape);
Tensor Concat(const std::vector<Tensor>& parts, std::size_t axis);
Tensor Slice(const Tensor& a, std::size_t axis, std::size_t begin, std::size_t end);
Tensor Transpose2d(const Tensor& a);
// Swaps the two trailing axes of a rank >= 2 tensor.
Tensor TransposeLast2(const Tensor& a);

// a [..., k] x b [k, n] -> [..., n]; leading dims of `a` are flattened.
Tensor MatMul(const Tensor& a, const Tensor& b);
// a [..., k] x b[n, k]^T -> [..., n].
Tensor MatMulNT(const Tensor& a, const Tensor& b);
// Batched a [B, m, k] x b [B, k, n] (or b^T when transpose_b, b [B, n, k]).
Tensor BatchMatMul(const Tensor& a, const Tensor& b, bool transpose_b = false);

// Softmax over the last axis. `mask` is an additive [rows, cols] matrix
// broadcast over leading dims; -infinity entries produce exactly 0. A row
// with every entry masked is an error.
Tensor SoftmaxRows(const Tensor& x, const Tensor* mask = nullptr);
Tensor LogSoftmaxRows(const Tensor& x);

// Normalizes over the last axis with population variance.
Tensor LayerNorm(const Tensor& x, const Tensor& gamma, const Tensor& beta, double eps = 1e-5);

// Inverted dropout; identity when rate == 0.
Tensor Dropout(const Tensor& x, double rate, Rng& rng);

// x [B, C, H, W], weight [O, C, kh, kw], bias [O]; stride 1, zero "same"
// padding (odd kernels).
Tensor Conv2d(const Tensor& x, const Tensor& weight, const Tensor& bias);
// Non-overlapping max pooling with window (ph, pw); trailing remainder
// rows/cols are dropped.
Tensor MaxPool2d(const Tensor& x, std::size_t ph, std::size_t pw);

// Additive causal mask [n, n]: 0 on and below the diagonal, -inf above.
Tensor CausalMask(std::size_t n);

}  // namespace audiotext::ag

#endif  // AUDIOTEXT_AUTOGRAD_OPS_H_
