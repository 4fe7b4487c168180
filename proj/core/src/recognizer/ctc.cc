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

#include "audiotext/recognizer/ctc.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "audiotext/autograd/ops.h"
#include "audiotext/autograd/tape.h"
#include "audiotext/charset.h"
#include "audiotext/error.h"

namespace audiotext::rec {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

struct CtcResult {
  double loss;
  std::vector<double> grad;  // d loss / d log_probs, [T, C]
};

// lp: [T, C] row-major log-probabilities.
CtcResult CtcForwardBackward(const double* lp, std::size_t t_len, std::size_t n_cls,
                             const LabelSeq& label, bool want_grad) {
  const std::size_t s_len = 2 * label.size() + 1;
  std::vector<int> ext(s_len, kBlank);
  for (std::size_t i = 0; i < label.size(); ++i) ext[2 * i + 1] = label[i];
  auto skip_allowed = [&](std::size_t s) {  // transition s-2 -> s
    return s >= 2 && ext[s] != kBlank && ext[s] != ext[s - 2];
  };
  auto emit = [&](std::size_t t, std::size_t s) { return lp[t * n_cls + ext[s]]; };

  std::vector<double> alpha(t_len * s_len, kNegInf);
  alpha[0] = emit(0, 0);
  if (s_len > 1) alpha[1] = emit(0, 1);
  for (std::size_t t = 1; t < t_len; ++t) {
    const double* prev = alpha.data() + (t - 1) * s_len;
    double* cur = alpha.data() + t * s_len;
    for (std::size_t s = 0; s < s_len; ++s) {
      double acc = prev[s];
      if (s >= 1) acc = LogAdd(acc, prev[s - 1]);
      if (skip_allowed(s)) acc = LogAdd(acc, prev[s - 2]);
      cur[s] = acc == kNegInf ? kNegInf : acc + emit(t, s);
    }
  }
  const double* last = alpha.data() + (t_len - 1) * s_len;
  const double log_p = s_len > 1 ? LogAdd(last[s_len - 1], last[s_len - 2]) : last[0];
  if (log_p == kNegInf) throw Error(ErrorKind::kNumeric, "label unalignable");

  CtcResult result{-log_p, {}};
  if (!want_grad) return result;

  std::vector<double> beta(t_len * s_len, kNegInf);
  double* bl = beta.data() + (t_len - 1) * s_len;
  bl[s_len - 1] = emit(t_len - 1, s_len - 1);
  if (s_len > 1) bl[s_len - 2] = emit(t_len - 1, s_len - 2);
  for (std::size_t t = t_len - 1; t-- > 0;) {
    const double* next = beta.data() + (t + 1) * s_len;
    double* cur = beta.data() + t * s_len;
    for (std::size_t s = 0; s < s_len; ++s) {
      double acc = next[s];
      if (s + 1 < s_len) acc = LogAdd(acc, next[s + 1]);
      if (s + 2 < s_len && skip_allowed(s + 2)) acc = LogAdd(acc, next[s + 2]);
      cur[s] = acc == kNegInf ? kNegInf : acc + emit(t, s);
    }
  }

  result.grad.assign(t_len * n_cls, 0.0);
  for (std::size_t t = 0; t < t_len; ++t) {
    for (std::size_t s = 0; s < s_len; ++s) {
      const double a = alpha[t * s_len + s], b = beta[t * s_len + s];
      if (a == kNegInf || b == kNegInf) continue;
      const std::size_t k = static_cast<std::size_t>(ext[s]);
      result.grad[t * n_cls + k] -= std::exp(a + b - lp[t * n_cls + k] - log_p);
    }
  }
  return result;
}

void ValidateLabel(const LabelSeq& label, std::size_t t_len, std::size_t n_cls) {
  for (int c : label) {
    if (c <= kBlank || static_cast<std::size_t>(c) >= n_cls) {
      throw Error(ErrorKind::kInvalidArgument,
                  "label class " + std::to_string(c) + " outside 1.." + std::to_string(n_cls - 1));
    }
  }
  if (!CtcAlignable(label, t_len)) throw Error(ErrorKind::kInvalidArgument, "label unalignable");
}

}  // namespace

LabelSeq EncodeLabel(std::string_view word) {
  LabelSeq out;
  out.reserve(word.size());
  for (char c : word) {
    const int k = CharIndex(c);
    if (k < 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "character '" + std::string(1, c) + "' outside charset a-z");
    }
    out.push_back(k + 1);
  }
  return out;
}

std::string DecodeLabel(const LabelSeq& label) {
  std::string out;
  for (int c : label) {
    if (c >= 1 && c <= 26) out.push_back(kCharset[static_cast<std::size_t>(c - 1)]);
  }
  return out;
}

bool CtcAlignable(const LabelSeq& label, std::size_t num_frames) {
  std::size_t needed = label.size();
  for (std::size_t i = 1; i < label.size(); ++i) needed += label[i] == label[i - 1];
  return num_frames >= std::max<std::size_t>(needed, 1);
}

ag::Tensor CtcLossBatch(const ag::Tensor& log_probs, const std::vector<LabelSeq>& labels) {
  if (log_probs.rank() != 3 || log_probs.dim(0) != labels.size() || log_probs.dim(2) < 2) {
    throw Error(ErrorKind::kShapeMismatch, "ctc: log_probs " + ag::ShapeString(log_probs.shape()) +
                                               " vs " + std::to_string(labels.size()) + " labels");
  }
  const std::size_t batch = log_probs.dim(0), t_len = log_probs.dim(1), n_cls = log_probs.dim(2);
  for (const auto& l : labels) ValidateLabel(l, t_len, n_cls);
  const bool rec = ag::ShouldRecord({&log_probs});
  std::vector<double> losses(batch);
  std::vector<double> grads;
  if (rec) grads.resize(log_probs.numel());
  const double* lp = log_probs.data().data();
  for (std::size_t b = 0; b < batch; ++b) {
    CtcResult r = CtcForwardBackward(lp + b * t_len * n_cls, t_len, n_cls, labels[b], rec);
    losses[b] = r.loss;
    if (rec) std::copy(r.grad.begin(), r.grad.end(), grads.begin() + b * t_len * n_cls);
  }
  ag::Tensor out = ag::MakeResult({batch}, std::move(losses), rec);
  ag::CheckFinite("CtcLoss", out);
  if (rec) {
    ag::Tape::Current()->Record(
        out.shared_impl(), [grads = std::move(grads), stride = t_len * n_cls,
                            li = log_probs.shared_impl(), o = out.impl()] {
          if (!li->requires_grad) return;
          auto& g = li->GradBuffer();
          for (std::size_t i = 0; i < g.size(); ++i) g[i] += o->grad[i / stride] * grads[i];
        });
  }
  return out;
}

ag::Tensor CtcLoss(const ag::Tensor& log_probs, const LabelSeq& label) {
  if (log_probs.rank() != 2) {
    throw Error(ErrorKind::kShapeMismatch,
                "ctc: expected [T, C] log-probs, got " + ag::ShapeString(log_probs.shape()));
  }
  const ag::Tensor batched = ag::Reshape(log_probs, {1, log_probs.dim(0), log_probs.dim(1)});
  return ag::Reshape(CtcLossBatch(batched, {label}), {});
}

LabelSeq CtcGreedyDecode(std::span<const double> log_probs, std::size_t num_classes) {
  LabelSeq out;
  int prev = -1;
  for (std::size_t t = 0; t * num_classes < log_probs.size(); ++t) {
    const auto row = log_probs.subspan(t * num_classes, num_classes);
    const int best = static_cast<int>(std::max_element(row.begin(), row.end()) - row.begin());
    if (best != prev && best != kBlank && best != kPad) out.push_back(best);
    prev = best;
  }
  return out;
}

std::vector<std::string> CtcGreedyDecodeBatch(const ag::Tensor& log_probs) {
  if (log_probs.rank() != 3) {
    throw Error(ErrorKind::kShapeMismatch,
                "ctc decode: expected [B, T, C], got " + ag::ShapeString(log_probs.shape()));
  }
  const std::size_t stride = log_probs.dim(1) * log_probs.dim(2);
  std::vector<std::string> out;
  for (std::size_t b = 0; b < log_probs.dim(0); ++b) {
    out.push_back(DecodeLabel(
        CtcGreedyDecode(log_probs.data().subspan(b * stride, stride), log_probs.dim(2))));
  }
  return out;
}

}  // namespace audiotext::rec
