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

#include "audiotext/autograd/adam.h"

#include <cmath>
#include <limits>

#include "audiotext/error.h"

namespace audiotext::ag {

void AdamConfig::Validate() const {
  if (!(lr > 0.0) || !std::isfinite(lr)) {
    throw Error(ErrorKind::kInvalidArgument, "adam: learning rate must be positive");
  }
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "adam: betas must lie in [0, 1)");
  }
  if (!(eps > 0.0)) throw Error(ErrorKind::kInvalidArgument, "adam: eps must be positive");
}

Adam::Adam(std::vector<Tensor> params, AdamConfig config)
    : params_(std::move(params)), config_(config) {
  config_.Validate();
  for (const auto& p : params_) {
    if (!p.defined()) throw Error(ErrorKind::kInvalidArgument, "adam: undefined parameter");
    m_.emplace_back(p.numel(), 0.0);
    v_.emplace_back(p.numel(), 0.0);
  }
}

void Adam::Step() {
  if (step_ == std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::kState, "adam: step counter overflow");
  }
  ++step_;
  const double t = static_cast<double>(step_);
  const double c1 = 1.0 - std::pow(config_.beta1, t);
  const double c2 = 1.0 - std::pow(config_.beta2, t);
  for (std::size_t i = 0; i < params_.size(); ++i) {
    TensorImpl* p = params_[i].impl();
    if (p->grad.empty()) {
      for (std::size_t j = 0; j < p->data.size(); ++j) {
        m_[i][j] *= config_.beta1;
        v_[i][j] *= config_.beta2;
        p->data[j] -= config_.lr * (m_[i][j] / c1) / (std::sqrt(v_[i][j] / c2) + config_.eps);
      }
      continue;
    }
    for (std::size_t j = 0; j < p->data.size(); ++j) {
      const double g = p->grad[j];
      m_[i][j] = config_.beta1 * m_[i][j] + (1.0 - config_.beta1) * g;
      v_[i][j] = config_.beta2 * v_[i][j] + (1.0 - config_.beta2) * g * g;
      p->data[j] -= config_.lr * (m_[i][j] / c1) / (std::sqrt(v_[i][j] / c2) + config_.eps);
    }
  }
}

void Adam::ZeroGrad() {
  for (auto& p : params_) p.ZeroGrad();
}

void Adam::SetState(std::uint64_t step, std::vector<std::vector<double>> m,
                    std::vector<std::vector<double>> v) {
  if (m.size() != params_.size() || v.size() != params_.size()) {
    throw Error(ErrorKind::kShapeMismatch, "adam: state covers " + std::to_string(m.size()) +
                                               " parameters, expected " +
                                               std::to_string(params_.size()));
  }
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (m[i].size() != params_[i].numel() || v[i].size() != params_[i].numel()) {
      throw Error(ErrorKind::kShapeMismatch,
                  "adam: moment size mismatch for parameter " + std::to_string(i));
    }
  }
  step_ = step;
  m_ = std::move(m);
  v_ = std::move(v);
}

}  // namespace audiotext::ag
