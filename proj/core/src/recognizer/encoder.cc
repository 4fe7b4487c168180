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

#include "audiotext/recognizer/encoder.h"

#include <cmath>

#include "audiotext/autograd/ops.h"
#include "audiotext/error.h"
#include "audiotext/nn/init.h"

namespace audiotext::rec {

void ImageEncoderConfig::Validate() const {
  if (stages.empty()) throw Error(ErrorKind::kInvalidArgument, "encoder needs at least one stage");
  std::size_t h = in_height, w = in_width;
  for (const auto& s : stages) {
    if (s.channels == 0 || s.pool_h == 0 || s.pool_w == 0 || h < s.pool_h || w < s.pool_w) {
      throw Error(ErrorKind::kInvalidArgument, "encoder stage does not fit the input size");
    }
    h /= s.pool_h;
    w /= s.pool_w;
  }
}

std::size_t ImageEncoderConfig::SequenceLength() const {
  std::size_t w = in_width;
  for (const auto& s : stages) w /= s.pool_w;
  return w;
}

ImageEncoder::ImageEncoder(const ImageEncoderConfig& config, Rng& rng)
    : config_((config.Validate(), config)),
      position_(config.SequenceLength(), config.d_model(), rng) {
  std::size_t in_ch = 1;
  for (const auto& s : config_.stages) {
    const double bound = std::sqrt(6.0 / static_cast<double>(in_ch * 9));
    blocks_.push_back({nn::UniformParameter({s.channels, in_ch, 3, 3}, bound, rng),
                       nn::ConstantParameter({s.channels}, 0.0)});
    in_ch = s.channels;
  }
}

ag::Tensor ImageEncoder::Forward(const ag::Tensor& images) const {
  if (images.rank() != 3 || images.dim(1) != config_.in_height ||
      images.dim(2) != config_.in_width) {
    throw Error(ErrorKind::kShapeMismatch,
                "encoder: expected images [B, " + std::to_string(config_.in_height) + ", " +
                    std::to_string(config_.in_width) + "], got " +
                    ag::ShapeString(images.shape()));
  }
  ag::Tensor x = ag::Reshape(images, {images.dim(0), 1, images.dim(1), images.dim(2)});
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& s = config_.stages[i];
    x = ag::MaxPool2d(ag::Relu(ag::Conv2d(x, blocks_[i].weight, blocks_[i].bias)), s.pool_h,
                      s.pool_w);
  }
  x = ag::TransposeLast2(ag::MeanAxis(x, 2));  // [B, C, W'] -> [B, W', C]
  return position_.Forward(x);
}

void ImageEncoder::CollectParameters(const std::string& prefix, nn::ParameterList& out) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const std::string p = prefix + "conv" + std::to_string(i) + ".";
    out.push_back({p + "weight", blocks_[i].weight});
    out.push_back({p + "bias", blocks_[i].bias});
  }
  position_.CollectParameters(prefix + "pos.", out);
}

ag::Tensor StackImages(const std::vector<const Matrix*>& images) {
  if (images.empty()) throw Error(ErrorKind::kInvalidArgument, "no images to stack");
  const std::size_t h = images[0]->rows(), w = images[0]->cols();
  std::vector<double> data;
  data.reserve(images.size() * h * w);
  for (const Matrix* m : images) {
    if (m->rows() != h || m->cols() != w) {
      throw Error(ErrorKind::kShapeMismatch, "images in a batch differ in size");
    }
    data.insert(data.end(), m->data().begin(), m->data().end());
  }
  return ag::Tensor::FromData({images.size(), h, w}, std::move(data));
}

}  // namespace audiotext::rec
