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

#include "audiotext/autograd/tensor.h"

#include <sstream>

#include "audiotext/error.h"

namespace audiotext::ag {

std::size_t NumElements(const Shape& shape) {
  std::size_t n = 1;
  for (auto d : shape) n *= d;
  return n;
}

std::string ShapeString(const Shape& shape) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ", ";
    os << shape[i];
  }
  os << ']';
  return os.str();
}

std::vector<double>& TensorImpl::GradBuffer() {
  if (grad.empty()) grad.assign(data.size(), 0.0);
  return grad;
}

Tensor Tensor::Zeros(Shape shape, bool requires_grad) {
  return Full(std::move(shape), 0.0, requires_grad);
}

Tensor Tensor::Full(Shape shape, double value, bool requires_grad) {
  auto impl = std::make_shared<TensorImpl>();
  impl->data.assign(NumElements(shape), value);
  impl->shape = std::move(shape);
  impl->requires_grad = requires_grad;
  return Tensor(std::move(impl));
}

Tensor Tensor::FromData(Shape shape, std::vector<double> data, bool requires_grad) {
  if (NumElements(shape) != data.size()) {
    throw Error(ErrorKind::kShapeMismatch, "tensor data length " + std::to_string(data.size()) +
                                               " does not match shape " + ShapeString(shape));
  }
  auto impl = std::make_shared<TensorImpl>();
  impl->shape = std::move(shape);
  impl->data = std::move(data);
  impl->requires_grad = requires_grad;
  return Tensor(std::move(impl));
}

Tensor Tensor::Scalar(double value, bool requires_grad) {
  return FromData({}, {value}, requires_grad);
}

std::vector<double> Tensor::grad() const {
  if (impl_->grad.empty()) return std::vector<double>(impl_->data.size(), 0.0);
  return impl_->grad;
}

double Tensor::item() const {
  if (numel() != 1) {
    throw Error(ErrorKind::kShapeMismatch, "item() on tensor of shape " + ShapeString(shape()));
  }
  return impl_->data[0];
}

Tensor Tensor::Clone() const {
  return FromData(impl_->shape, impl_->data, impl_->requires_grad);
}

io::RawTensor Tensor::ToRaw() const {
  io::RawTensor raw;
  for (auto d : shape()) raw.shape.push_back(static_cast<std::uint32_t>(d));
  raw.data = impl_->data;
  return raw;
}

Tensor Tensor::FromRaw(const io::RawTensor& raw, bool requires_grad) {
  Shape shape(raw.shape.begin(), raw.shape.end());
  return FromData(std::move(shape), raw.data, requires_grad);
}

}  // namespace audiotext::ag
