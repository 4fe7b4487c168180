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

#ifndef AUDIOTEXT_AUTOGRAD_ADAM_H_
#define AUDIOTEXT_AUTOGRAD_ADAM_H_

#include <cstdint>
#include <vector>

#include "audiotext/autograd/tensor.h"

namespace audiotext::ag {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  void Validate() const;
};

// Adam with bias correction over a fixed list of parameters. A parameter
// whose gradient was never populated is treated as having a zero gradient.
class Adam {
 public:
  Adam(std::vector<Tensor> params, AdamConfig config = {});

  void Step();
  void ZeroGrad();

  std::uint64_t step() const { return step_; }
  const AdamConfig& config() const { return config_; }
  const std::vector<Tensor>& params() const { return params_; }
  const std::vector<std::vector<double>>& first_moments() const { return m_; }
  const std::vector<std::vector<double>>& second_moments() const { return v_; }

  // Restores optimizer state; sizes must match the parameters.
  void SetState(std::uint64_t step, std::vector<std::vector<double>> m,
                std::vector<std::vector<double>> v);

 private:
  std::vector<Tensor> params_;
  AdamConfig config_;
  std::uint64_t step_ = 0;
  std::vector<std::vector<double>> m_;
  std::vector<std::vector<double>> v_;
};

}  // namespace audiotext::ag

#endif  // AUDIOTEXT_AUTOGRAD_ADAM_H_
