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

#include "audiotext/nn/parameters.h"

#include "audiotext/error.h"

namespace audiotext::nn {

ParameterList Module::Parameters(const std::string& prefix) const {
  ParameterList out;
  CollectParameters(prefix, out);
  return out;
}

std::vector<ag::Tensor> Tensors(const ParameterList& params) {
  std::vector<ag::Tensor> out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(p.tensor);
  return out;
}

std::size_t CountScalars(const ParameterList& params) {
  std::size_t n = 0;
  for (const auto& p : params) n += p.tensor.numel();
  return n;
}

void StoreParameters(const ParameterList& params, io::NamedTable& table) {
  for (const auto& p : params) table.PutTensor(p.name, p.tensor.ToRaw());
}

void LoadParameters(const ParameterList& params, const io::NamedTable& table) {
  for (const auto& p : params) {
    const io::RawTensor* raw = table.FindTensor(p.name);
    if (raw == nullptr) throw Error(ErrorKind::kFormat, "checkpoint lacks parameter " + p.name);
    const ag::Tensor loaded = ag::Tensor::FromRaw(*raw);
    if (loaded.shape() != p.tensor.shape()) {
      throw Error(ErrorKind::kShapeMismatch, "parameter " + p.name + " has shape " +
                                                 ag::ShapeString(loaded.shape()) + ", expected " +
                                                 ag::ShapeString(p.tensor.shape()));
    }
    std::copy(loaded.data().begin(), loaded.data().end(), p.tensor.impl()->data.begin());
  }
}

}  // namespace audiotext::nn
