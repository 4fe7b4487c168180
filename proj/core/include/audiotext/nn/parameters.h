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

#ifndef AUDIOTEXT_NN_PARAMETERS_H_
#define AUDIOTEXT_NN_PARAMETERS_H_

#include <string>
#include <vector>

#include "audiotext/autograd/tensor.h"
#include "audiotext/io/named_table.h"

namespace audiotext::nn {

struct NamedParameter {
  std::string name;
  ag::Tensor tensor;
};

using ParameterList = std::vector<NamedParameter>;

class Module {
 public:
  virtual ~Module() = default;

  // Appends this module's parameters, each named `prefix` + local name.
  virtual void CollectParameters(const std::string& prefix, ParameterList& out) const = 0;

  ParameterList Parameters(const std::string& prefix = "") const;
};

std::vector<ag::Tensor> Tensors(const ParameterList& params);
std::size_t CountScalars(const ParameterList& params);

void StoreParameters(const ParameterList& params, io::NamedTable& table);

// Copies values for every parameter from `table`; a missing name or shape
// mismatch is an error. Entries in `table` that match no parameter are
// ignored.
void LoadParameters(const ParameterList& params, const io::NamedTable& table);

}  // namespace audiotext::nn

#endif  // AUDIOTEXT_NN_PARAMETERS_H_
