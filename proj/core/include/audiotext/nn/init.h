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

#ifndef AUDIOTEXT_NN_INIT_H_
#define AUDIOTEXT_NN_INIT_H_

#include "audiotext/autograd/tensor.h"
#include "audiotext/rng.h"

namespace audiotext::nn {

// Leaf tensors with requires_grad set.
ag::Tensor UniformParameter(const ag::Shape& shape, double bound, Rng& rng);
ag::Tensor NormalParameter(const ag::Shape& shape, double stddev, Rng& rng);
ag::Tensor ConstantParameter(const ag::Shape& shape, double value);

}  // namespace audiotext::nn

#endif  // AUDIOTEXT_NN_INIT_H_
