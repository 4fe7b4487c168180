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

#include "audiotext/autograd/gradcheck.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "audiotext/autograd/tape.h"
#include "audiotext/error.h"
#include "audiotext/rng.h"

namespace audiotext::ag {
namespace {

double Norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double Evaluate(const std::function<Tensor()>& loss_fn) {
  NoGradScope no_grad;
  return loss_fn().item();
}

}  // namespace

double RelativeError(const std::vector<double>& analytic, const std::vector<double>& numeric,
                     double norm_floor) {
  if (analytic.size() != numeric.size()) {
    throw Error(ErrorKind::kShapeMismatch, "gradcheck: vector length mismatch");
  }
  std::vector<double> diff(analytic.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = analytic[i] - numeric[i];
  return Norm(diff) / std::max({Norm(analytic), Norm(numeric), norm_floor});
}

std::vector<GradCheckResult> GradCheck(const std::function<Tensor()>& loss_fn,
                                       const std::vector<std::pair<std::string, Tensor>>& inputs,
                                       const GradCheckOptions& options) {
  for (const auto& [name, t] : inputs) {
    if (!t.requires_grad()) {
      throw Error(ErrorKind::kInvalidArgument, "gradcheck: input " + name + " does not require grad");
    }
    t.impl()->grad.clear();
  }
  {
    Tape tape;
    TapeScope scope(tape);
    tape.Backward(loss_fn());
  }
  std::vector<GradCheckResult> results;
  Rng rng(options.seed);
  for (const auto& [name, t] : inputs) {
    const std::vector<double> full = t.grad();
    std::vector<std::size_t> coords(t.numel());
    std::iota(coords.begin(), coords.end(), std::size_t{0});
    if (options.max_coords && *options.max_coords < coords.size()) {
      rng.Shuffle(std::span<std::size_t>(coords));
      coords.resize(*options.max_coords);
      std::sort(coords.begin(), coords.end());
    }
    std::vector<double> analytic;
    std::vector<double> numeric;
    auto& data = t.impl()->data;
    for (std::size_t c : coords) {
      const double saved = data[c];
      data[c] = saved + options.step;
      const double plus = Evaluate(loss_fn);
      data[c] = saved - options.step;
      const double minus = Evaluate(loss_fn);
      data[c] = saved;
      analytic.push_back(full[c]);
      numeric.push_back((plus - minus) / (2.0 * options.step));
    }
    results.push_back({name, coords.size(), RelativeError(analytic, numeric, options.norm_floor)});
  }
  return results;
}

}  // namespace audiotext::ag
