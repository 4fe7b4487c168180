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

#include "audiotext/nn/init.h"

namespace audiotext::nn {

ag::Tensor UniformParameter(const ag::Shape& shape, double bound, Rng& rng) {
  std::vector<double> v(ag::NumElements(shape));
  for (double& x : v) x = rng.Uniform(-bound, bound);
  return ag::Tensor::FromData(shape, std::move(v), true);
}

ag::Tensor NormalParameter(const ag::Shape& shape, double stddev, Rng& rng) {
  std::vector<double> v(ag::NumElements(shape));
  for (double& x : v) x = rng.Normal(0.0, stddev);
  return ag::Tensor::FromData(shape, std::move(v), true);
}

ag::Tensor ConstantParameter(const ag::Shape& shape, double value) {
  return ag::Tensor::Full(shape, value, true);
}

}  // namespace audiotext::nn
