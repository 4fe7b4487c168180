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

#include "audiotext/nn/attention.h"

#include <cmath>

#include "audiotext/autograd/ops.h"
#include "audiotext/error.h"

namespace audiotext::nn {

MultiHeadAttention::MultiHeadAttention(std::size_t d_model, std::size_t n_heads, Rng& rng)
    : d_model_(d_model),
      n_heads_(n_heads),
      q_proj_(d_model, d_model, rng),
      k_proj_(d_model, d_model, rng),
      v_proj_(d_model, d_model, rng),
      out_proj_(d_model, d_model, rng) {
  if (n_heads == 0 || d_model % n_heads != 0) {
    throw Error(ErrorKind::kInvalidArgument, "d_model must be divisible by the head count");
  }
}

ag::Tensor MultiHeadAttention::Forward(const ag::Tensor& q, const ag::Tensor& k,
                                       const ag::Tensor& v, const ag::Tensor* mask) const {
  const bool unbatched = q.rank() == 2;
  auto batched = [&](const ag::Tensor& t) {
    return t.rank() == 2 ? ag::Reshape(t, {1, t.dim(0), t.dim(1)}) : t;
  };
  const ag::Tensor qb = batched(q), kb = batched(k), vb = batched(v);
  if (qb.rank() != 3 || kb.rank() != 3 || vb.rank() != 3 || kb.shape() != vb.shape() ||
      qb.dim(0) != kb.dim(0)) {
    throw Error(ErrorKind::kShapeMismatch, "attention: incompatible q/k/v shapes " +
                                               ag::ShapeString(q.shape()) + ", " +
                                               ag::ShapeString(k.shape()) + ", " +
                                               ag::ShapeString(v.shape()));
  }
  const std::size_t head_dim = d_model_ / n_heads_;
  const double scale = 1.0 / std::sqrt(static_cast<double>(head_dim));
  const ag::Tensor qp = q_proj_.Forward(qb);
  const ag::Tensor kp = k_proj_.Forward(kb);
  const ag::Tensor vp = v_proj_.Forward(vb);
  std::vector<ag::Tensor> heads;
  heads.reserve(n_heads_);
  for (std::size_t h = 0; h < n_heads_; ++h) {
    const std::size_t lo = h * head_dim, hi = lo + head_dim;
    const ag::Tensor qh = ag::Slice(qp, 2, lo, hi);
    const ag::Tensor kh = ag::Slice(kp, 2, lo, hi);
    const ag::Tensor vh = ag::Slice(vp, 2, lo, hi);
    const ag::Tensor scores = ag::ScalarMul(ag::BatchMatMul(qh, kh, true), scale);
    heads.push_back(ag::BatchMatMul(ag::SoftmaxRows(scores, mask), vh));
  }
  ag::Tensor out = out_proj_.Forward(n_heads_ == 1 ? heads[0] : ag::Concat(heads, 2));
  if (unbatched) out = ag::Reshape(out, {out.dim(1), out.dim(2)});
  return out;
}

void MultiHeadAttention::CollectParameters(const std::string& prefix, ParameterList& out) const {
  q_proj_.CollectParameters(prefix + "q.", out);
  k_proj_.CollectParameters(prefix + "k.", out);
  v_proj_.CollectParameters(prefix + "v.", out);
  out_proj_.CollectParameters(prefix + "o.", out);
}

}  // namespace audiotext::nn
