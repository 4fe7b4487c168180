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

#ifndef AUDIOTEXT_AUDIO_AUDIO_DECODER_H_
#define AUDIOTEXT_AUDIO_AUDIO_DECODER_H_

#include <memory>
#include <vector>

#include "audiotext/nn/decoder_layer.h"
#include "audiotext/nn/layers.h"

namespace audiotext::audio {

struct AudioDecoderConfig {
  std::size_t n_mels = 80;
  std::size_t d_model = 256;
  std::size_t prenet_hidden = 256;
  std::size_t n_layers = 3;  // in [1, 8]
  std::size_t n_heads = 4;
  std::size_t mlp_hidden = 1024;
  std::size_t max_frames = 64;
  double dropout = 0.0;

  void Validate() const;
};

// Two frame-wise ReLU projections.
class Prenet : public nn::Module {
 public:
  Prenet(std::size_t in, std::size_t hidden, std::size_t out, Rng& rng);

  ag::Tensor Forward(const ag::Tensor& x) const;
  void CollectParameters(const std::string& prefix, nn::ParameterList& out) const override;

  nn::Linear& fc1() { return fc1_; }
  nn::Linear& fc2() { return fc2_; }

 private:
  nn::Linear fc1_;
  nn::Linear fc2_;
};

// Prenet, learned positions, causal decoder stack, final norm, mel projection.
class AudioDecoder : public nn::Module {
 public:
  AudioDecoder(const AudioDecoderConfig& config, Rng& rng);

  // shifted: [B, T, n_mels] or [T, n_mels]; memory: [B, M, d_model] or [M, d_model].
  // Returns predicted frames with the shape of `shifted`. Row t depends on
  // shifted rows <= t only.
  ag::Tensor Forward(const ag::Tensor& shifted, const ag::Tensor& memory,
                     Rng* dropout_rng = nullptr) const;

  // Decoder stack on prenet output that already carries positions.
  ag::Tensor Decode(const ag::Tensor& z_hat, const ag::Tensor& memory,
                    Rng* dropout_rng = nullptr) const;

  void CollectParameters(const std::string& prefix, nn::ParameterList& out) const override;

  const AudioDecoderConfig& config() const { return config_; }
  Prenet& prenet() { return prenet_; }
  nn::Linear& mel_linear() { return mel_linear_; }

 private:
  AudioDecoderConfig config_;
  Prenet prenet_;
  nn::LearnedPositionalEncoding position_;
  std::vector<std::unique_ptr<nn::DecoderLayer>> layers_;
  nn::LayerNorm final_norm_;
  nn::Linear mel_linear_;
};

}  // namespace audiotext::audio

#endif  // AUDIOTEXT_AUDIO_AUDIO_DECODER_H_
