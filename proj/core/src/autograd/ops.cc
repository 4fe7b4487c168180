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

#include "audiotext/autograd/ops.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "audiotext/error.h"
#include "ops_internal.h"

namespace audiotext::ag {

namespace internal {

void ThrowShape(const std::string& op, const std::string& detail) {
  throw Error(ErrorKind::kShapeMismatch, op + ": " + detail);
}

}  // namespace internal

namespace {

using internal::AsMatrix;
using internal::RecordOp;
using internal::ThrowShape;

bool IsSuffix(const Shape& small, const Shape& big) {
  if (small.size() > big.size()) return false;
  return std::equal(small.rbegin(), small.rend(), big.rbegin());
}

struct Broadcast {
  Shape out;
  std::size_t outer = 1;
  std::size_t inner = 1;
  bool a_small = false;
  bool b_small = false;
};

Broadcast ResolveBroadcast(const char* op, const Tensor& a, const Tensor& b) {
  Broadcast bc;
  if (a.shape() == b.shape()) {
    bc.out = a.shape();
    bc.inner = a.numel();
  } else if (IsSuffix(b.shape(), a.shape())) {
    bc.out = a.shape();
    bc.inner = b.numel();
    bc.b_small = true;
  } else if (IsSuffix(a.shape(), b.shape())) {
    bc.out = b.shape();
    bc.inner = a.numel();
    bc.a_small = true;
  } else {
    ThrowShape(op, "incompatible shapes " + ShapeString(a.shape()) + " and " +
                       ShapeString(b.shape()));
  }
  bc.outer = bc.inner == 0 ? 0 : NumElements(bc.out) / bc.inner;
  return bc;
}

enum class BinaryKind { kAdd, kSub, kMul };

Tensor Binary(BinaryKind kind, const char* name, const Tensor& a, const Tensor& b) {
  const Broadcast bc = ResolveBroadcast(name, a, b);
  const auto& x = a.impl()->data;
  const auto& y = b.impl()->data;
  std::vector<double> out(bc.outer * bc.inner);
  for (std::size_t o = 0; o < bc.outer; ++o) {
    const double* xp = x.data() + (bc.a_small ? 0 : o * bc.inner);
    const double* yp = y.data() + (bc.b_small ? 0 : o * bc.inner);
    double* op = out.data() + o * bc.inner;
    switch (kind) {
      case BinaryKind::kAdd:
        for (std::size_t i = 0; i < bc.inner; ++i) op[i] = xp[i] + yp[i];
        break;
      case BinaryKind::kSub:
        for (std::size_t i = 0; i < bc.inner; ++i) op[i] = xp[i] - yp[i];
        break;
      case BinaryKind::kMul:
        for (std::size_t i = 0; i < bc.inner; ++i) op[i] = xp[i] * yp[i];
        break;
    }
  }
  const bool rec = ShouldRecord({&a, &b});
  Tensor result = MakeResult(bc.out, std::move(out), rec);
  CheckFinite(name, result);
  if (rec) {
    RecordOp(result, [kind, bc, ai = a.shared_impl(), bi = b.shared_impl(), o = result.impl()] {
      const auto& g = o->grad;
      const double sign_b = kind == BinaryKind::kSub ? -1.0 : 1.0;
      if (ai->requires_grad) {
        auto& ga = ai->GradBuffer();
        for (std::size_t k = 0; k < bc.outer; ++k) {
          double* gp = ga.data() + (bc.a_small ? 0 : k * bc.inner);
          const double* gg = g.data() + k * bc.inner;
          if (kind == BinaryKind::kMul) {
            const double* yp = bi->data.data() + (bc.b_small ? 0 : k * bc.inner);
            for (std::size_t i = 0; i < bc.inner; ++i) gp[i] += gg[i] * yp[i];
          } else {
            for (std::size_t i = 0; i < bc.inner; ++i) gp[i] += gg[i];
          }
        }
      }
      if (bi->requires_grad) {
        auto& gb = bi->GradBuffer();
        for (std::size_t k = 0; k < bc.outer; ++k) {
          double* gp = gb.data() + (bc.b_small ? 0 : k * bc.inner);
          const double* gg = g.data() + k * bc.inner;
          if (kind == BinaryKind::kMul) {
            const double* xp = ai->data.data() + (bc.a_small ? 0 : k * bc.inner);
            for (std::size_t i = 0; i < bc.inner; ++i) gp[i] += gg[i] * xp[i];
          } else {
            for (std::size_t i = 0; i < bc.inner; ++i) gp[i] += sign_b * gg[i];
          }
        }
      }
    });
  }
  return result;
}

// Unary elementwise op with derivative expressed through the input value.
template <typename Fwd, typename Deriv>
Tensor Unary(const char* name, const Tensor& a, Fwd fwd, Deriv deriv) {
  const auto& x = a.impl()->data;
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = fwd(x[i]);
  const bool rec = ShouldRecord({&a});
  Tensor result = MakeResult(a.shape(), std::move(out), rec);
  CheckFinite(name, result);
  if (rec) {
    RecordOp(result, [deriv, ai = a.shared_impl(), o = result.impl()] {
      if (!ai->requires_grad) return;
      auto& ga = ai->GradBuffer();
      const auto& g = o->grad;
      for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += g[i] * deriv(ai->data[i]);
    });
  }
  return result;
}

// Shapes as (outer, axis, inner) around `axis`.
struct AxisSplit {
  std::size_t outer = 1;
  std::size_t len = 1;
  std::size_t inner = 1;
};

AxisSplit SplitAt(const Shape& shape, std::size_t axis) {
  AxisSplit s;
  for (std::size_t i = 0; i < axis; ++i) s.outer *= shape[i];
  s.len = shape[axis];
  for (std::size_t i = axis + 1; i < shape.size(); ++i) s.inner *= shape[i];
  return s;
}

}  // namespace

Tensor Add(const Tensor& a, const Tensor& b) { return Binary(BinaryKind::kAdd, "Add", a, b); }
Tensor Sub(const Tensor& a, const Tensor& b) { return Binary(BinaryKind::kSub, "Sub", a, b); }
Tensor Mul(const Tensor& a, const Tensor& b) { return Binary(BinaryKind::kMul, "Mul", a, b); }

Tensor ScalarMul(const Tensor& a, double s) {
  return Unary(
      "ScalarMul", a, [s](double v) { return s * v; }, [s](double) { return s; });
}

namespace {
thread_local KinkMonitor* active_monitor = nullptr;

void ReportMinAbs(std::span<const double> values) {
  if (active_monitor == nullptr) return;
  double m = std::numeric_limits<double>::infinity();
  for (double v : values) m = std::min(m, std::abs(v));
  ReportKinkDistance(m);
}
}  // namespace

KinkMonitor::KinkMonitor() : min_distance_(std::numeric_limits<double>::infinity()) {
  if (active_monitor != nullptr) throw Error(ErrorKind::kState, "kink monitors do not nest");
  active_monitor = this;
}

KinkMonitor::~KinkMonitor() { active_monitor = nullptr; }

void ReportKinkDistance(double distance) {
  if (active_monitor != nullptr) {
    active_monitor->min_distance_ = std::min(active_monitor->min_distance_, distance);
  }
}

Tensor Relu(const Tensor& a) {
  ReportMinAbs(a.data());
  return Unary(
      "Relu", a, [](double v) { return v > 0.0 ? v : 0.0; },
      [](double v) { return v > 0.0 ? 1.0 : 0.0; });
}

Tensor Abs(const Tensor& a) {
  ReportMinAbs(a.data());
  return Unary(
      "Abs", a, [](double v) { return std::abs(v); },
      [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); });
}

Tensor Sum(const Tensor& a) {
  double acc = 0.0;
  for (double v : a.data()) acc += v;
  const bool rec = ShouldRecord({&a});
  Tensor result = MakeResult({}, {acc}, rec);
  CheckFinite("Sum", result);
  if (rec) {
    RecordOp(result, [ai = a.shared_impl(), o = result.impl()] {
      if (!ai->requires_grad) return;
      const double g = o->grad[0];
      for (double& v : ai->GradBuffer()) v += g;
    });
  }
  return result;
}

Tensor Mean(const Tensor& a) {
  if (a.numel() == 0) ThrowShape("Mean", "empty tensor");
  return ScalarMul(Sum(a), 1.0 / static_cast<double>(a.numel()));
}

Tensor MeanAxis(const Tensor& a, std::size_t axis) {
  if (axis >= a.rank()) ThrowShape("MeanAxis", "axis out of range for " + ShapeString(a.shape()));
  const AxisSplit s = SplitAt(a.shape(), axis);
  if (s.len == 0) ThrowShape("MeanAxis", "empty axis");
  Shape out_shape = a.shape();
  out_shape.erase(out_shape.begin() + static_cast<std::ptrdiff_t>(axis));
  std::vector<double> out(s.outer * s.inner, 0.0);
  const auto& x = a.impl()->data;
  const double scale = 1.0 / static_cast<double>(s.len);
  for (std::size_t o = 0; o < s.outer; ++o) {
    for (std::size_t l = 0; l < s.len; ++l) {
      const double* src = x.data() + (o * s.len + l) * s.inner;
      double* dst = out.data() + o * s.inner;
      for (std::size_t i = 0; i < s.inner; ++i) dst[i] += src[i];
    }
  }
  for (double& v : out) v *= scale;
  const bool rec = ShouldRecord({&a});
  Tensor result = MakeResult(std::move(out_shape), std::move(out), rec);
  CheckFinite("MeanAxis", result);
  if (rec) {
    RecordOp(result, [s, scale, ai = a.shared_impl(), o = result.impl()] {
      if (!ai->requires_grad) return;
      auto& ga = ai->GradBuffer();
      for (std::size_t k = 0; k < s.outer; ++k) {
        const double* g = o->grad.data() + k * s.inner;
        for (std::size_t l = 0; l < s.len; ++l) {
          double* dst = ga.data() + (k * s.len + l) * s.inner;
          for (std::size_t i = 0; i < s.inner; ++i) dst[i] += scale * g[i];
        }
      }
    });
  }
  return result;
}

Tensor Reshape(const Tensor& a, Shape shape) {
  if (NumElements(shape) != a.numel()) {
    ThrowShape("Reshape", "cannot reshape " + ShapeString(a.shape()) + " to " + ShapeString(shape));
  }
  const bool rec = ShouldRecord({&a});
  Tensor result = MakeResult(std::move(shape), a.impl()->data, rec);
  if (rec) {
    RecordOp(result, [ai = a.shared_impl(), o = result.impl()] {
      if (!ai->requires_grad) return;
      auto& ga = ai->GradBuffer();
      for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += o->grad[i];
    });
  }
  return result;
}

Tensor Concat(const std::vector<Tensor>& parts, std::size_t axis) {
  if (parts.empty()) ThrowShape("Concat", "no inputs");
  const Shape& ref = parts[0].shape();
  if (axis >= ref.size()) ThrowShape("Concat", "axis out of range for " + ShapeString(ref));
  Shape out_shape = ref;
  out_shape[axis] = 0;
  for (const auto& p : parts) {
    Shape probe = p.shape();
    if (probe.size() != ref.size()) ThrowShape("Concat", "rank mismatch");
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (i != axis && probe[i] != ref[i]) {
        ThrowShape("Concat", "shapes " + ShapeString(ref) + " and " + ShapeString(probe) +
                                 " differ off the concat axis");
      }
    }
    out_shape[axis] += probe[axis];
  }
  const AxisSplit s = SplitAt(out_shape, axis);
  std::vector<double> out(NumElements(out_shape));
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    offsets.push_back(offset);
    const std::size_t chunk = p.dim(axis) * s.inner;
    const auto& x = p.impl()->data;
    for (std::size_t o = 0; o < s.outer; ++o) {
      std::copy_n(x.data() + o * chunk, chunk, out.data() + o * s.len * s.inner + offset);
    }
    offset += chunk;
  }
  bool rec = false;
  for (const auto& p : parts) rec = rec || ShouldRecord({&p});
  Tensor result = MakeResult(std::move(out_shape), std::move(out), rec);
  if (rec) {
    std::vector<std::shared_ptr<TensorImpl>> impls;
    for (const auto& p : parts) impls.push_back(p.shared_impl());
    RecordOp(result, [s, axis, impls = std::move(impls), offsets = std::move(offsets),
                      o = result.impl()] {
      for (std::size_t j = 0; j < impls.size(); ++j) {
        if (!impls[j]->requires_grad) continue;
        auto& gp = impls[j]->GradBuffer();
        const std::size_t chunk = impls[j]->shape[axis] * s.inner;
        for (std::size_t k = 0; k < s.outer; ++k) {
          const double* src = o->grad.data() + k * s.len * s.inner + offsets[j];
          double* dst = gp.data() + k * chunk;
          for (std::size_t i = 0; i < chunk; ++i) dst[i] += src[i];
        }
      }
    });
  }
  return result;
}

Tensor Slice(const Tensor& a, std::size_t axis, std::size_t begin, std::size_t end) {
  if (axis >= a.rank()) ThrowShape("Slice", "axis out of range for " + ShapeString(a.shape()));
  if (begin > end || end > a.dim(axis)) {
    ThrowShape("Slice", "range [" + std::to_string(begin) + ", " + std::to_string(end) +
                            ") out of bounds for " + ShapeString(a.shape()));
  }
  const AxisSplit s = SplitAt(a.shape(), axis);
  Shape out_shape = a.shape();
  out_shape[axis] = end - begin;
  const std::size_t chunk = (end - begin) * s.inner;
  std::vector<double> out(s.outer * chunk);
  const auto& x = a.impl()->data;
  for (std::size_t o = 0; o < s.outer; ++o) {
    std::copy_n(x.data() + (o * s.len + begin) * s.inner, chunk, out.data() + o * chunk);
  }
  const bool rec = ShouldRecord({&a});
  Tensor result = MakeResult(std::move(out_shape), std::move(out), rec);
  if (rec) {
    RecordOp(result, [s, begin, chunk, ai = a.shared_impl(), o = result.impl()] {
      if (!ai->requires_grad) return;
      auto& ga = ai->GradBuffer();
      for (std::size_t k = 0; k < s.outer; ++k) {
        const double* src = o->grad.data() + k * chunk;
        double* dst = ga.data() + (k * s.len + begin) * s.inner;
        for (std::size_t i = 0; i < chunk; ++i) dst[i] += src[i];
      }
    });
  }
  return result;
}

Tensor TransposeLast2(const Tensor& a) {
  if (a.rank() < 2) ThrowShape("Transpose", "need rank >= 2, got " + ShapeString(a.shape()));
  const std::size_t rows = a.dim(a.rank() - 2);
  const std::size_t cols = a.dim(a.rank() - 1);
  const std::size_t batch = rows * cols == 0 ? 0 : a.numel() / (rows * cols);
  Shape out_shape = a.shape();
  std::swap(out_shape[a.rank() - 2], out_shape[a.rank() - 1]);
  std::vector<double> out(a.numel());
  const auto& x = a.impl()->data;
  for (std::size_t b = 0; b < batch; ++b) {
    const double* src = x.data() + b * rows * cols;
    double* dst = out.data() + b * rows * cols;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) dst[c * rows + r] = src[r * cols + c];
    }
  }
  const bool rec = ShouldRecord({&a});
  Tensor result = MakeResult(std::move(out_shape), std::move(out), rec);
  if (rec) {
    RecordOp(result, [batch, rows, cols, ai = a.shared_impl(), o = result.impl()] {
      if (!ai->requires_grad) return;
      auto& ga = ai->GradBuffer();
      for (std::size_t b = 0; b < batch; ++b) {
        const double* g = o->grad.data() + b * rows * cols;
        double* dst = ga.data() + b * rows * cols;
        for (std::size_t r = 0; r < rows; ++r) {
          for (std::size_t c = 0; c < cols; ++c) dst[r * cols + c] += g[c * rows + r];
        }
      }
    });
  }
  return result;
}

Tensor Transpose2d(const Tensor& a) {
  if (a.rank() != 2) ThrowShape("Transpose2d", "need rank 2, got " + ShapeString(a.shape()));
  return TransposeLast2(a);
}

Tensor MatMul(const Tensor& a, const Tensor& b) {
  if (a.rank() < 1 || b.rank() != 2 || a.shape().back() != b.dim(0)) {
    ThrowShape("MatMul", "cannot multiply " + ShapeString(a.shape()) + " by " +
                             ShapeString(b.shape()));
  }
  const auto k = static_cast<Eigen::Index>(b.dim(0));
  const auto n = static_cast<Eigen::Index>(b.dim(1));
  const auto m = static_cast<Eigen::Index>(k == 0 ? 0 : a.numel() / k);
  Shape out_shape = a.shape();
  out_shape.back() = static_cast<std::size_t>(n);
  std::vector<double> out(static_cast<std::size_t>(m * n));
  AsMatrix(out, m, n).noalias() = AsMatrix(a.impl()->data, m, k) * AsMatrix(b.impl()->data, k, n);
  const bool rec = ShouldRecord({&a, &b});
  Tensor result = MakeResult(std::move(out_shape), std::move(out), rec);
  CheckFinite("MatMul", result);
  if (rec) {
    RecordOp(result, [m, k, n, ai = a.shared_impl(), bi = b.shared_impl(), o = result.impl()] {
      const auto g = AsMatrix(o->grad, m, n);
      if (ai->requires_grad) {
        AsMatrix(ai->GradBuffer(), m, k).noalias() += g * AsMatrix(bi->data, k, n).transpose();
      }
      if (bi->requires_grad) {
        AsMatrix(bi->GradBuffer(), k, n).noalias() += AsMatrix(ai->data, m, k).transpose() * g;
      }
    });
  }
  return result;
}

Tensor MatMulNT(const Tensor& a, const Tensor& b) {
  if (a.rank() < 1 || b.rank() != 2 || a.shape().back() != b.dim(1)) {
    ThrowShape("MatMulNT", "cannot multiply " + ShapeString(a.shape()) + " by transpose of " +
                               ShapeString(b.shape()));
  }
  const auto k = static_cast<Eigen::Index>(b.dim(1));
  const auto n = static_cast<Eigen::Index>(b.dim(0));
  const auto m = static_cast<Eigen::Index>(k == 0 ? 0 : a.numel() / k);
  Shape out_shape = a.shape();
  out_shape.back() = static_cast<std::size_t>(n);
  std::vector<double> out(static_cast<std::size_t>(m * n));
  AsMatrix(out, m, n).noalias() =
      AsMatrix(a.impl()->data, m, k) * AsMatrix(b.impl()->data, n, k).transpose();
  const bool rec = ShouldRecord({&a, &b});
  Tensor result = MakeResult(std::move(out_shape), std::move(out), rec);
  CheckFinite("MatMulNT", result);
  if (rec) {
    RecordOp(result, [m, k, n, ai = a.shared_impl(), bi = b.shared_impl(), o = result.impl()] {
      const auto g = AsMatrix(o->grad, m, n);
      if (ai->requires_grad) {
        AsMatrix(ai->GradBuffer(), m, k).noalias() += g * AsMatrix(bi->data, n, k);
      }
      if (bi->requires_grad) {
        AsMatrix(bi->GradBuffer(), n, k).noalias() += g.transpose() * AsMatrix(ai->data, m, k);
      }
    });
  }
  return result;
}

Tensor BatchMatMul(const Tensor& a, const Tensor& b, bool transpose_b) {
  if (a.rank() != 3 || b.rank() != 3 || a.dim(0) != b.dim(0) ||
      a.dim(2) != (transpose_b ? b.dim(2) : b.dim(1))) {
    ThrowShape("BatchMatMul", "cannot multiply " + ShapeString(a.shape()) + " by " +
                                  ShapeString(b.shape()) + (transpose_b ? " (transposed)" : ""));
  }
  const std::size_t batch = a.dim(0);
  const auto m = static_cast<Eigen::Index>(a.dim(1));
  const auto k = static_cast<Eigen::Index>(a.dim(2));
  const auto n = static_cast<Eigen::Index>(transpose_b ? b.dim(1) : b.dim(2));
  std::vector<double> out(batch * static_cast<std::size_t>(m * n));
  const double* ap = a.impl()->data.data();
  const double* bp = b.impl()->data.data();
  for (std::size_t i = 0; i < batch; ++i) {
    internal::MatMap dst(out.data() + i * m * n, m, n);
    internal::ConstMatMap lhs(ap + i * m * k, m, k);
    if (transpose_b) {
      dst.noalias() = lhs * internal::ConstMatMap(bp + i * n * k, n, k).transpose();
    } else {
      dst.noalias() = lhs * internal::ConstMatMap(bp + i * k * n, k, n);
    }
  }
  const bool rec = ShouldRecord({&a, &b});
  Tensor result = MakeResult({batch, static_cast<std::size_t>(m), static_cast<std::size_t>(n)},
                             std::move(out), rec);
  CheckFinite("BatchMatMul", result);
  if (rec) {
    RecordOp(result, [batch, m, k, n, transpose_b, ai = a.shared_impl(), bi = b.shared_impl(),
                      o = result.impl()] {
      double* ga = ai->requires_grad ? ai->GradBuffer().data() : nullptr;
      double* gb = bi->requires_grad ? bi->GradBuffer().data() : nullptr;
      for (std::size_t i = 0; i < batch; ++i) {
        internal::ConstMatMap g(o->grad.data() + i * m * n, m, n);
        internal::ConstMatMap lhs(ai->data.data() + i * m * k, m, k);
        if (transpose_b) {
          internal::ConstMatMap rhs(bi->data.data() + i * n * k, n, k);
          if (ga) internal::MatMap(ga + i * m * k, m, k).noalias() += g * rhs;
          if (gb) internal::MatMap(gb + i * n * k, n, k).noalias() += g.transpose() * lhs;
        } else {
          internal::ConstMatMap rhs(bi->data.data() + i * k * n, k, n);
          if (ga) internal::MatMap(ga + i * m * k, m, k).noalias() += g * rhs.transpose();
          if (gb) internal::MatMap(gb + i * k * n, k, n).noalias() += lhs.transpose() * g;
        }
      }
    });
  }
  return result;
}

Tensor SoftmaxRows(const Tensor& x, const Tensor* mask) {
  if (x.rank() < 1 || x.shape().back() == 0) ThrowShape("Softmax", "need a non-empty last axis");
  const std::size_t n = x.shape().back();
  const std::size_t rows = x.numel() / n;
  std::size_t mask_rows = 0;
  if (mask != nullptr) {
    if (mask->rank() != 2 || mask->dim(1) != n || x.rank() < 2 ||
        mask->dim(0) != x.dim(x.rank() - 2)) {
      ThrowShape("Softmax", "mask " + ShapeString(mask->shape()) + " does not match input " +
                                ShapeString(x.shape()));
    }
    mask_rows = mask->dim(0);
  }
  const auto& in = x.impl()->data;
  std::vector<double> out(in.size());
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = in.data() + r * n;
    const double* mr = mask ? mask->data().data() + (r % mask_rows) * n : nullptr;
    double* yr = out.data() + r * n;
    double mx = kNegInf;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = mr ? xr[j] + mr[j] : xr[j];
      yr[j] = v;
      if (v > mx) mx = v;
    }
    if (mx == kNegInf) throw Error(ErrorKind::kNumeric, "degenerate attention row");
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      yr[j] = yr[j] == kNegInf ? 0.0 : std::exp(yr[j] - mx);
      total += yr[j];
    }
    const double inv = 1.0 / total;
    for (std::size_t j = 0; j < n; ++j) yr[j] *= inv;
  }
  const bool rec = ShouldRecord({&x});
  Tensor result = MakeResult(x.shape(), std::move(out), rec);
  CheckFinite("Softmax", result);
  if (rec) {
    RecordOp(result, [n, rows, xi = x.shared_impl(), o = result.impl()] {
      if (!xi->requires_grad) return;
      auto& gx = xi->GradBuffer();
      for (std::size_t r = 0; r < rows; ++r) {
        const double* y = o->data.data() + r * n;
        const double* g = o->grad.data() + r * n;
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) dot += g[j] * y[j];
        double* dst = gx.data() + r * n;
        for (std::size_t j = 0; j < n; ++j) dst[j] += y[j] * (g[j] - dot);
      }
    });
  }
  return result;
}

Tensor LogSoftmaxRows(const Tensor& x) {
  if (x.rank() < 1 || x.shape().back() == 0) ThrowShape("LogSoftmax", "need a non-empty last axis");
  const std::size_t n = x.shape().back();
  const std::size_t rows = x.numel() / n;
  const auto& in = x.impl()->data;
  std::vector<double> out(in.size());
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = in.data() + r * n;
    const double mx = *std::max_element(xr, xr + n);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) total += std::exp(xr[j] - mx);
    const double lse = mx + std::log(total);
    for (std::size_t j = 0; j < n; ++j) out[r * n + j] = xr[j] - lse;
  }
  const bool rec = ShouldRecord({&x});
  Tensor result = MakeResult(x.shape(), std::move(out), rec);
  CheckFinite("LogSoftmax", result);
  if (rec) {
    RecordOp(result, [n, rows, xi = x.shared_impl(), o = result.impl()] {
      if (!xi->requires_grad) return;
      auto& gx = xi->GradBuffer();
      for (std::size_t r = 0; r < rows; ++r) {
        const double* y = o->data.data() + r * n;
        const double* g = o->grad.data() + r * n;
        double gsum = 0.0;
        for (std::size_t j = 0; j < n; ++j) gsum += g[j];
        double* dst = gx.data() + r * n;
        for (std::size_t j = 0; j < n; ++j) dst[j] += g[j] - std::exp(y[j]) * gsum;
      }
    });
  }
  return result;
}

Tensor LayerNorm(const Tensor& x, const Tensor& gamma, const Tensor& beta, double eps) {
  if (x.rank() < 1 || x.shape().back() == 0) ThrowShape("LayerNorm", "need a non-empty last axis");
  const std::size_t n = x.shape().back();
  if (gamma.shape() != Shape{n} || beta.shape() != Shape{n}) {
    ThrowShape("LayerNorm", "gamma/beta " + ShapeString(gamma.shape()) + "/" +
                                ShapeString(beta.shape()) + " do not match input " +
                                ShapeString(x.shape()));
  }
  const std::size_t rows = x.numel() / n;
  const auto& in = x.impl()->data;
  const auto& gm = gamma.impl()->data;
  const auto& bt = beta.impl()->data;
  std::vector<double> out(in.size());
  std::vector<double> xhat(in.size());
  std::vector<double> rstd(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = in.data() + r * n;
    double mean = 0.0;
    for (std::size_t j = 0; j < n; ++j) mean += xr[j];
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t j = 0; j < n; ++j) var += (xr[j] - mean) * (xr[j] - mean);
    var /= static_cast<double>(n);
    rstd[r] = 1.0 / std::sqrt(var + eps);
    for (std::size_t j = 0; j < n; ++j) {
      xhat[r * n + j] = (xr[j] - mean) * rstd[r];
      out[r * n + j] = xhat[r * n + j] * gm[j] + bt[j];
    }
  }
  const bool rec = ShouldRecord({&x, &gamma, &beta});
  Tensor result = MakeResult(x.shape(), std::move(out), rec);
  CheckFinite("LayerNorm", result);
  if (rec) {
    RecordOp(result, [n, rows, xhat = std::move(xhat), rstd = std::move(rstd),
                      xi = x.shared_impl(), gi = gamma.shared_impl(), bi = beta.shared_impl(),
                      o = result.impl()] {
      const auto& g = o->grad;
      if (gi->requires_grad || bi->requires_grad) {
        double* gg = gi->requires_grad ? gi->GradBuffer().data() : nullptr;
        double* gb = bi->requires_grad ? bi->GradBuffer().data() : nullptr;
        for (std::size_t r = 0; r < rows; ++r) {
          for (std::size_t j = 0; j < n; ++j) {
            if (gg) gg[j] += g[r * n + j] * xhat[r * n + j];
            if (gb) gb[j] += g[r * n + j];
          }
        }
      }
      if (xi->requires_grad) {
        auto& gx = xi->GradBuffer();
        const auto& gm = gi->data;
        const double inv_n = 1.0 / static_cast<double>(n);
        for (std::size_t r = 0; r < rows; ++r) {
          double mean_d = 0.0;
          double mean_dx = 0.0;
          for (std::size_t j = 0; j < n; ++j) {
            const double d = g[r * n + j] * gm[j];
            mean_d += d;
            mean_dx += d * xhat[r * n + j];
          }
          mean_d *= inv_n;
          mean_dx *= inv_n;
          for (std::size_t j = 0; j < n; ++j) {
            const double d = g[r * n + j] * gm[j];
            gx[r * n + j] += rstd[r] * (d - mean_d - xhat[r * n + j] * mean_dx);
          }
        }
      }
    });
  }
  return result;
}

Tensor Dropout(const Tensor& x, double rate, Rng& rng) {
  if (rate < 0.0 || rate >= 1.0) {
    throw Error(ErrorKind::kInvalidArgument, "dropout rate must lie in [0, 1)");
  }
  if (rate == 0.0) return x;
  const double keep = 1.0 - rate;
  std::vector<double> scale(x.numel());
  for (double& s : scale) s = rng.Uniform() < keep ? 1.0 / keep : 0.0;
  return Mul(x, Tensor::FromData(x.shape(), std::move(scale)));
}

Tensor CausalMask(std::size_t n) {
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = -std::numeric_limits<double>::infinity();
  }
  return Tensor::FromData({n, n}, std::move(m));
}

}  // namespace audiotext::ag
