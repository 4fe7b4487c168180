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

#include "audiotext/audio/audio_decoder.h"

#include "audiotext/autograd/ops.h"
#include "audiotext/error.h"

namespace audiotext::audio {

void AudioDecoderConfig::Validate() const {
  if (n_layers < 1 || n_layers > 8) {
    throw Error(ErrorKind::kInvalidArgument,
                "audio decoder layers must be in [1, 8], got " + std::to_string(n_layers));
  }
  if (n_mels == 0 || d_model == 0 || prenet_hidden == 0 || max_frames == 0) {
    throw Error(ErrorKind::kInvalidArgument, "audio decoder sizes must be positive");
  }
}

Prenet::Prenet(std::size_t in, std::size_t hidden, std::size_t out, Rng& rng)
    : fc1_(in, hidden, rng), fc2_(hidden, out, rng) {}

ag::Tensor Prenet::Forward(const ag::Tensor& x) const {
  return ag::Relu(fc2_.Forward(ag::Relu(fc1_.Forward(x))));
}

void Prenet::CollectParameters(const std::string& prefix, nn::ParameterList& out) const {
  fc1_.CollectParameters(prefix + "fc1.", out);
  fc2_.CollectParameters(prefix + "fc2.", out);
}

AudioDecoder::AudioDecoder(const AudioDecoderConfig& config, Rng& rng)
    : config_((config.Validate(), config)),
      prenet_(config.n_mels, config.prenet_hidden, config.d_model, rng),
      position_(config.max_frames, config.d_model, rng),
      final_norm_(config.d_model),
      mel_linear_(config.d_model, config.n_mels, rng) {
  const nn::DecoderLayerConfig layer_cfg{.d_model = config.d_model,
                                         .n_heads = config.n_heads,
                                         .mlp_hidden = config.mlp_hidden,
                                         .dropout = config.dropout};
  for (std::size_t i = 0; i < config.n_layers; ++i) {
    layers_.push_back(std::make_unique<nn::DecoderLayer>(layer_cfg, rng));
  }
}

ag::Tensor AudioDecoder::Decode(const ag::Tensor& z_hat, const ag::Tensor& memory,
                                Rng* dropout_rng) const {
  if (z_hat.rank() < 2) {
    throw Error(ErrorKind::kShapeMismatch, "audio decoder: input " + ag::ShapeString(z_hat.shape()));
  }
  const ag::Tensor mask = ag::CausalMask(z_hat.dim(z_hat.rank() - 2));
  ag::Tensor x = z_hat;
  for (const auto& layer : layers_) x = layer->Forward(x, memory, &mask, dropout_rng);
  return x;
}

ag::Tensor AudioDecoder::Forward(const ag::Tensor& shifted, const ag::Tensor& memory,
                                 Rng* dropout_rng) const {
  if (shifted.rank() < 2 || shifted.shape().back() != config_.n_mels) {
    throw Error(ErrorKind::kShapeMismatch, "audio decoder: expected " +
                                               std::to_string(config_.n_mels) +
                                               " bins per frame, got " +
                                               ag::ShapeString(shifted.shape()));
  }
  const ag::Tensor z_hat = position_.Forward(prenet_.Forward(shifted));
  return mel_linear_.Forward(final_norm_.Forward(Decode(z_hat, memory, dropout_rng)));
}

void AudioDecoder::CollectParameters(const std::string& prefix, nn::ParameterList& out) const {
  prenet_.CollectParameters(prefix + "prenet.", out);
  position_.CollectParameters(prefix + "pos.", out);
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    layers_[i]->CollectParameters(prefix + "layer" + std::to_string(i) + ".", out);
  }
  final_norm_.CollectParameters(prefix + "final_norm.", out);
  mel_linear_.CollectParameters(prefix + "mel_linear.", out);
}

}  // namespace audiotext::audio
