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

#ifndef AUDIOTEXT_AUTOGRAD_TENSOR_H_
#define AUDIOTEXT_AUTOGRAD_TENSOR_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "audiotext/io/melt.h"

namespace audiotext::ag {

using Shape = std::vector<std::size_t>;

std::size_t NumElements(const Shape& shape);
std::string ShapeString(const Shape& shape);

// Storage shared by Tensor handles. `grad` stays empty until a gradient is
// accumulated into it.
struct TensorImpl {
  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;
  bool requires_grad = false;

  // Zero-filled gradient buffer of the tensor's size.
  std::vector<double>& GradBuffer();
};

// Reference-semantics handle to a dense row-major float64 array. Copies of a
// Tensor alias the same storage; use Clone() for a deep copy.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::shared_ptr<TensorImpl> impl) : impl_(std::move(impl)) {}

  static Tensor Zeros(Shape shape, bool requires_grad = false);
  static Tensor Full(Shape shape, double value, bool requires_grad = false);
  static Tensor FromData(Shape shape, std::vector<double> data, bool requires_grad = false);
  static Tensor Scalar(double value, bool requires_grad = false);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const { return impl_->shape; }
  std::size_t rank() const { return impl_->shape.size(); }
  std::size_t dim(std::size_t axis) const { return impl_->shape.at(axis); }
  std::size_t numel() const { return impl_->data.size(); }

  std::span<const double> data() const { return impl_->data; }
  // Writable view; only meaningful for leaves or tensors outside a tape.
  std::span<double> mutable_data() { return impl_->data; }

  bool has_grad() const { return !impl_->grad.empty(); }
  // Zeros when no gradient has been accumulated.
  std::vector<double> grad() const;
  void ZeroGrad() { impl_->grad.clear(); }

  bool requires_grad() const { return impl_->requires_grad; }
  void set_requires_grad(bool value) { impl_->requires_grad = value; }

  // Value of a single-element tensor.
  double item() const;

  Tensor Clone() const;

  TensorImpl* impl() const { return impl_.get(); }
  const std::shared_ptr<TensorImpl>& shared_impl() const { return impl_; }

  io::RawTensor ToRaw() const;
  static Tensor FromRaw(const io::RawTensor& raw, bool requires_grad = false);

 private:
  std::shared_ptr<TensorImpl> impl_;
};

}  // namespace audiotext::ag

#endif  // AUDIOTEXT_AUTOGRAD_TENSOR_H_
