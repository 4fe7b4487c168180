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

#include "audiotext/nn/decoder_layer.h"

#include "audiotext/autograd/ops.h"
#include "audiotext/error.h"

namespace audiotext::nn {

DecoderLayer::DecoderLayer(const DecoderLayerConfig& config, Rng& rng)
    : config_(config),
      ln_self_(config.d_model),
      self_attn_(config.d_model, config.n_heads, rng),
      ln_cross_(config.d_model),
      cross_attn_(config.d_model, config.n_heads, rng),
      ln_mlp_(config.d_model),
      fc1_(config.d_model, config.mlp_hidden, rng),
      fc2_(config.mlp_hidden, config.d_model, rng) {}

ag::Tensor DecoderLayer::MaybeDropout(const ag::Tensor& x, Rng* rng) const {
  if (config_.dropout == 0.0) return x;
  if (rng == nullptr) throw Error(ErrorKind::kState, "dropout enabled without an rng");
  return ag::Dropout(x, config_.dropout, *rng);
}

ag::Tensor DecoderLayer::Forward(const ag::Tensor& x, const ag::Tensor& memory,
                                 const ag::Tensor* causal_mask, Rng* dropout_rng) const {
  ag::Tensor h = ln_self_.Forward(x);
  ag::Tensor y = ag::Add(x, MaybeDropout(self_attn_.Forward(h, h, h, causal_mask), dropout_rng));
  h = ln_cross_.Forward(y);
  y = ag::Add(y, MaybeDropout(cross_attn_.Forward(h, memory, memory), dropout_rng));
  h = fc2_.Forward(ag::Relu(fc1_.Forward(ln_mlp_.Forward(y))));
  return ag::Add(y, MaybeDropout(h, dropout_rng));
}

void DecoderLayer::CollectParameters(const std::string& prefix, ParameterList& out) const {
  ln_self_.CollectParameters(prefix + "ln_self.", out);
  self_attn_.CollectParameters(prefix + "self_attn.", out);
  ln_cross_.CollectParameters(prefix + "ln_cross.", out);
  cross_attn_.CollectParameters(prefix + "cross_attn.", out);
  ln_mlp_.CollectParameters(prefix + "ln_mlp.", out);
  fc1_.CollectParameters(prefix + "fc1.", out);
  fc2_.CollectParameters(prefix + "fc2.", out);
}

}  // namespace audiotext::nn
