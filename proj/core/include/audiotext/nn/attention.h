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

#ifndef AUDIOTEXT_NN_ATTENTION_H_
#define AUDIOTEXT_NN_ATTENTION_H_

#include "audiotext/nn/layers.h"

namespace audiotext::nn {

// Scaled dot-product attention with `n_heads` heads of width
// d_model / n_heads. Inputs are [T, d_model] or [B, T, d_model]; `mask` is
// an additive [Tq, Tk] matrix shared across the batch and heads.
class MultiHeadAttention : public Module {
 public:
  MultiHeadAttention(std::size_t d_model, std::size_t n_heads, Rng& rng);

  ag::Tensor Forward(const ag::Tensor& q, const ag::Tensor& k, const ag::Tensor& v,
                     const ag::Tensor* mask = nullptr) const;
  void CollectParameters(const std::string& prefix, ParameterList& out) const override;

  std::size_t d_model() const { return d_model_; }
  std::size_t n_heads() const { return n_heads_; }
  Linear& q_proj() { return q_proj_; }
  Linear& k_proj() { return k_proj_; }
  Linear& v_proj() { return v_proj_; }
  Linear& out_proj() { return out_proj_; }

 private:
  std::size_t d_model_;
  std::size_t n_heads_;
  Linear q_proj_;
  Linear k_proj_;
  Linear v_proj_;
  Linear out_proj_;
};

}  // namespace audiotext::nn

#endif  // AUDIOTEXT_NN_ATTENTION_H_
