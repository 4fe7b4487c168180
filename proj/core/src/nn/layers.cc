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

#include "audiotext/nn/layers.h"

#include <cmath>

#include "audiotext/autograd/ops.h"
#include "audiotext/error.h"
#include "audiotext/nn/init.h"

namespace audiotext::nn {

Linear::Linear(std::size_t in, std::size_t out, Rng& rng) {
  if (in == 0 || out == 0) throw Error(ErrorKind::kInvalidArgument, "Linear needs nonzero widths");
  const double bound = 1.0 / std::sqrt(static_cast<double>(in));
  weight_ = UniformParameter({out, in}, bound, rng);
  bias_ = UniformParameter({out}, bound, rng);
}

ag::Tensor Linear::Forward(const ag::Tensor& x) const {
  if (x.rank() == 0 || x.shape().back() != in_features()) {
    throw Error(ErrorKind::kShapeMismatch,
                "Linear: expected input width " + std::to_string(in_features()) + ", got shape " +
                    ag::ShapeString(x.rank() == 0 ? ag::Shape{} : x.shape()));
  }
  return ag::Add(ag::MatMulNT(x, weight_), bias_);
}

void Linear::CollectParameters(const std::string& prefix, ParameterList& out) const {
  out.push_back({prefix + "weight", weight_});
  out.push_back({prefix + "bias", bias_});
}

LayerNorm::LayerNorm(std::size_t width, double eps)
    : gamma_(ConstantParameter({width}, 1.0)), beta_(ConstantParameter({width}, 0.0)), eps_(eps) {}

ag::Tensor LayerNorm::Forward(const ag::Tensor& x) const {
  return ag::LayerNorm(x, gamma_, beta_, eps_);
}

void LayerNorm::CollectParameters(const std::string& prefix, ParameterList& out) const {
  out.push_back({prefix + "gamma", gamma_});
  out.push_back({prefix + "beta", beta_});
}

LearnedPositionalEncoding::LearnedPositionalEncoding(std::size_t max_len, std::size_t width,
                                                     Rng& rng)
    : table_(NormalParameter({max_len, width}, 0.02, rng)) {}

ag::Tensor LearnedPositionalEncoding::Forward(const ag::Tensor& x) const {
  if (x.rank() < 2 || x.shape().back() != table_.dim(1)) {
    throw Error(ErrorKind::kShapeMismatch, "positional encoding: input " +
                                               ag::ShapeString(x.shape()) + " does not end in width " +
                                               std::to_string(table_.dim(1)));
  }
  const std::size_t t = x.dim(x.rank() - 2);
  if (t > max_len()) {
    throw Error(ErrorKind::kInvalidArgument, "sequence length " + std::to_string(t) +
                                                 " exceeds positional table size " +
                                                 std::to_string(max_len()));
  }
  return ag::Add(x, ag::Slice(table_, 0, 0, t));
}

void LearnedPositionalEncoding::CollectParameters(const std::string& prefix,
                                                  ParameterList& out) const {
  out.push_back({prefix + "table", table_});
}

}  // namespace audiotext::nn
