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

#ifndef AUDIOTEXT_RECOGNIZER_RECOGNIZER_H_
#define AUDIOTEXT_RECOGNIZER_RECOGNIZER_H_

#include "audiotext/recognizer/ctc.h"
#include "audiotext/recognizer/encoder.h"

namespace audiotext::rec {

struct RecognizerOutput {
  ag::Tensor embeddings;  // [B, T, d_model]
  ag::Tensor log_probs;   // [B, T, kNumClasses]
};

// Image encoder followed by a per-position linear CTC head.
class Recognizer : public nn::Module {
 public:
  explicit Recognizer(const ImageEncoderConfig& config, Rng& rng);

  RecognizerOutput Forward(const ag::Tensor& images) const;
  std::vector<std::string> Predict(const ag::Tensor& images) const;
  void CollectParameters(const std::string& prefix, nn::ParameterList& out) const override;

  const ImageEncoder& encoder() const { return encoder_; }

 private:
  ImageEncoder encoder_;
  nn::Linear head_;
};

}  // namespace audiotext::rec

#endif  // AUDIOTEXT_RECOGNIZER_RECOGNIZER_H_
