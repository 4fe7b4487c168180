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

#ifndef AUDIOTEXT_AUTOGRAD_GRADCHECK_H_
#define AUDIOTEXT_AUTOGRAD_GRADCHECK_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "audiotext/autograd/tensor.h"

namespace audiotext::ag {

struct GradCheckOptions {
  double step = 1e-5;
  // When set, only this many coordinates per input are probed, chosen with
  // `seed`; otherwise every coordinate is probed.
  std::optional<std::size_t> max_coords;
  std::uint64_t seed = 0;
  // Lower bound of the relative-error denominator. Parameters whose true
  // gradient is identically zero produce central-difference roundoff of
  // order 1e-10, which this floor keeps from reading as a relative error.
  double norm_floor = 1e-6;
};

struct GradCheckResult {
  std::string name;
  std::size_t coords = 0;
  // ||analytic - numeric||_2 / max(||analytic||_2, ||numeric||_2, norm_floor)
  // over the probed coordinates.
  double rel_error = 0.0;
};

// Compares reverse-mode gradients of the scalar `loss_fn()` with respect to
// each tensor in `inputs` against central differences. `loss_fn` must
// rebuild the graph from the inputs' current values on every call.
std::vector<GradCheckResult> GradCheck(const std::function<Tensor()>& loss_fn,
                                       const std::vector<std::pair<std::string, Tensor>>& inputs,
                                       const GradCheckOptions& options = {});

double RelativeError(const std::vector<double>& analytic, const std::vector<double>& numeric,
                     double norm_floor = 1e-6);

}  // namespace audiotext::ag

#endif  // AUDIOTEXT_AUTOGRAD_GRADCHECK_H_
