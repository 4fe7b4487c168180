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

#ifndef AUDIOTEXT_NN_DECODER_LAYER_H_
#define AUDIOTEXT_NN_DECODER_LAYER_H_

#include "audiotext/nn/attention.h"

namespace audiotext::nn {

struct DecoderLayerConfig {
  std::size_t d_model = 256;
  std::size_t n_heads = 4;
  std::size_t mlp_hidden = 1024;
  double dropout = 0.0;
};

// Pre-norm transformer decoder layer:
//   x += SelfAttn(LN1(x), causal mask)
//   x += CrossAttn(LN2(x), memory)
//   x += MLP(LN3(x))
class DecoderLayer : public Module {
 public:
  DecoderLayer(const DecoderLayerConfig& config, Rng& rng);

  // `dropout_rng` is only drawn from when the configured rate is nonzero.
  ag::Tensor Forward(const ag::Tensor& x, const ag::Tensor& memory, const ag::Tensor* causal_mask,
                     Rng* dropout_rng = nullptr) const;
  void CollectParameters(const std::string& prefix, ParameterList& out) const override;

  const DecoderLayerConfig& config() const { return config_; }

 private:
  ag::Tensor MaybeDropout(const ag::Tensor& x, Rng* rng) const;

  DecoderLayerConfig config_;
  LayerNorm ln_self_;
  MultiHeadAttention self_attn_;
  LayerNorm ln_cross_;
  MultiHeadAttention cross_attn_;
  LayerNorm ln_mlp_;
  Linear fc1_;
  Linear fc2_;
};

}  // namespace audiotext::nn

#endif  // AUDIOTEXT_NN_DECODER_LAYER_H_
