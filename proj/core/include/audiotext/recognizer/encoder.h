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

#ifndef AUDIOTEXT_RECOGNIZER_ENCODER_H_
#define AUDIOTEXT_RECOGNIZER_ENCODER_H_

#include <vector>

#include "audiotext/matrix.h"
#include "audiotext/nn/layers.h"

namespace audiotext::rec {

struct ConvStage {
  std::size_t channels;
  std::size_t pool_h;
  std::size_t pool_w;
};

struct ImageEncoderConfig {
  std::size_t in_height = 32;
  std::size_t in_width = 128;
  std::vector<ConvStage> stages = {{32, 2, 2}, {64, 2, 2}, {128, 2, 1}, {256, 2, 1}};

  void Validate() const;
  std::size_t d_model() const { return stages.back().channels; }
  std::size_t SequenceLength() const;
};

// Conv(3x3) -> ReLU -> MaxPool per stage, mean over the remaining height,
// columns as sequence positions, plus a learned positional encoding.
// [B, H, W] images -> [B, W', d_model].
class ImageEncoder : public nn::Module {
 public:
  ImageEncoder(const ImageEncoderConfig& config, Rng& rng);

  ag::Tensor Forward(const ag::Tensor& images) const;
  void CollectParameters(const std::string& prefix, nn::ParameterList& out) const override;

  const ImageEncoderConfig& config() const { return config_; }

 private:
  struct ConvBlock {
    ag::Tensor weight;
    ag::Tensor bias;
  };
  ImageEncoderConfig config_;
  std::vector<ConvBlock> blocks_;
  nn::LearnedPositionalEncoding position_;
};

// Stacks [H, W] images into a [B, H, W] tensor.
ag::Tensor StackImages(const std::vector<const Matrix*>& images);

}  // namespace audiotext::rec

#endif  // AUDIOTEXT_RECOGNIZER_ENCODER_H_
