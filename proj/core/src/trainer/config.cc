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

#include "audiotext/trainer/config.h"

#include <cmath>

#include <fmt/format.h>

#include "audiotext/autograd/ops.h"
#include "audiotext/error.h"

namespace audiotext::train {

void TrainConfig::Validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::kInvalidArgument, msg); };
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) fail(fmt::format("alpha must be >= 0, got {}", alpha));
  if (n_layers < 1 || n_layers > 8) fail(fmt::format("layers must be in [1, 8], got {}", n_layers));
  if (epochs < 1) fail(fmt::format("epochs must be >= 1, got {}", epochs));
  if (batch_size < 1) fail("batch size must be >= 1");
  if (!(lr > 0.0)) fail(fmt::format("learning rate must be > 0, got {}", lr));
}

std::string TrainConfig::Snapshot() const {
  return fmt::format(
      "alpha={}\nlayers={}\nformat={}\nvoice={}\nlr={}\nbatch={}\nepochs={}\nseed={}\nwith_audio={}\n",
      alpha, n_layers, dsp::FormatName(format), voice, lr, batch_size, epochs, seed,
      with_audio ? 1 : 0);
}

double JointLoss(double l_rec, double l_mel, double alpha) { return l_rec + alpha * l_mel; }

ag::Tensor JointLoss(const ag::Tensor& l_rec, const ag::Tensor& l_mel, double alpha) {
  if (alpha == 0.0) return l_rec;
  return ag::Add(l_rec, ag::ScalarMul(l_mel, alpha));
}

}  // namespace audiotext::train
