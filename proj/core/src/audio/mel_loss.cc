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

#include "audiotext/audio/mel_loss.h"

#include <cmath>

#include "audiotext/autograd/ops.h"
#include "audiotext/autograd/tape.h"
#include "audiotext/error.h"

namespace audiotext::audio {

ag::Tensor MaskedL1Loss(const ag::Tensor& pred, const ag::Tensor& target,
                        const ag::Tensor* frame_mask) {
  if (pred.shape() != target.shape() || pred.rank() < 2) {
    throw Error(ErrorKind::kShapeMismatch, "mel l1: prediction " + ag::ShapeString(pred.shape()) +
                                               " vs target " + ag::ShapeString(target.shape()));
  }
  const std::size_t width = pred.shape().back();
  const std::size_t frames = pred.numel() / width;
  if (frame_mask != nullptr) {
    const ag::Shape expected(pred.shape().begin(), pred.shape().end() - 1);
    if (frame_mask->shape() != expected) {
      throw Error(ErrorKind::kShapeMismatch, "mel l1: frame mask " +
                                                 ag::ShapeString(frame_mask->shape()) +
                                                 " vs frames " + ag::ShapeString(expected));
    }
  }
  auto valid = [&](std::size_t f) { return frame_mask == nullptr || frame_mask->data()[f] != 0.0; };

  std::size_t n_valid = 0;
  double total = 0.0;
  const auto p = pred.data(), t = target.data();
  for (std::size_t f = 0; f < frames; ++f) {
    if (!valid(f)) continue;
    ++n_valid;
    for (std::size_t j = f * width; j < (f + 1) * width; ++j) {
      total += std::abs(p[j] - t[j]);
      ag::ReportKinkDistance(std::abs(p[j] - t[j]));
    }
  }
  if (n_valid == 0) throw Error(ErrorKind::kInvalidArgument, "mel l1: every frame is masked");
  const double scale = 1.0 / static_cast<double>(n_valid * width);

  const bool rec = ag::ShouldRecord({&pred, &target});
  ag::Tensor out = ag::MakeResult({}, {total * scale}, rec);
  if (rec) {
    std::vector<double> sign(pred.numel(), 0.0);
    for (std::size_t f = 0; f < frames; ++f) {
      if (!valid(f)) continue;
      for (std::size_t j = f * width; j < (f + 1) * width; ++j) {
        sign[j] = (p[j] > t[j]) - (p[j] < t[j]);
      }
    }
    ag::Tape::Current()->Record(
        out.shared_impl(), [sign = std::move(sign), scale, pi = pred.shared_impl(),
                            ti = target.shared_impl(), o = out.impl()] {
          const double g = o->grad[0] * scale;
          if (pi->requires_grad) {
            auto& gp = pi->GradBuffer();
            for (std::size_t i = 0; i < gp.size(); ++i) gp[i] += g * sign[i];
          }
          if (ti->requires_grad) {
            auto& gt = ti->GradBuffer();
            for (std::size_t i = 0; i < gt.size(); ++i) gt[i] -= g * sign[i];
          }
        });
  }
  return out;
}

}  // namespace audiotext::audio
