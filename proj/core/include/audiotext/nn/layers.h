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

#ifndef AUDIOTEXT_NN_LAYERS_H_
#define AUDIOTEXT_NN_LAYERS_H_

#include "audiotext/autograd/tensor.h"
#include "audiotext/nn/parameters.h"
#include "audiotext/rng.h"

namespace audiotext::nn {

// y = x W^T + b over the last axis; weight [out, in], bias [out].
class Linear : public Module {
 public:
  Linear(std::size_t in, std::size_t out, Rng& rng);

  ag::Tensor Forward(const ag::Tensor& x) const;
  void CollectParameters(const std::string& prefix, ParameterList& out) const override;

  std::size_t in_features() const { return weight_.dim(1); }
  std::size_t out_features() const { return weight_.dim(0); }
  ag::Tensor& weight() { return weight_; }
  ag::Tensor& bias() { return bias_; }

 private:
  ag::Tensor weight_;
  ag::Tensor bias_;
};

class LayerNorm : public Module {
 public:
  explicit LayerNorm(std::size_t width, double eps = 1e-5);

  ag::Tensor Forward(const ag::Tensor& x) const;
  void CollectParameters(const std::string& prefix, ParameterList& out) const override;

 private:
  ag::Tensor gamma_;
  ag::Tensor beta_;
  double eps_;
};

// Adds rows 0..T-1 of a learned [max_len, width] table to x [..., T, width].
class LearnedPositionalEncoding : public Module {
 public:
  LearnedPositionalEncoding(std::size_t max_len, std::size_t width, Rng& rng);

  ag::Tensor Forward(const ag::Tensor& x) const;
  void CollectParameters(const std::string& prefix, ParameterList& out) const override;

  std::size_t max_len() const { return table_.dim(0); }
  const ag::Tensor& table() const { return table_; }

 private:
  ag::Tensor table_;
};

}  // namespace audiotext::nn

#endif  // AUDIOTEXT_NN_LAYERS_H_
