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

#include "audiotext/recognizer/recognizer.h"

#include "audiotext/autograd/ops.h"
#include "audiotext/autograd/tape.h"

namespace audiotext::rec {

Recognizer::Recognizer(const ImageEncoderConfig& config, Rng& rng)
    : encoder_(config, rng), head_(config.d_model(), kNumClasses, rng) {}

RecognizerOutput Recognizer::Forward(const ag::Tensor& images) const {
  RecognizerOutput out;
  out.embeddings = encoder_.Forward(images);
  out.log_probs = ag::LogSoftmaxRows(head_.Forward(out.embeddings));
  return out;
}

std::vector<std::string> Recognizer::Predict(const ag::Tensor& images) const {
  ag::NoGradScope no_grad;
  return CtcGreedyDecodeBatch(Forward(images).log_probs);
}

void Recognizer::CollectParameters(const std::string& prefix, nn::ParameterList& out) const {
  encoder_.CollectParameters(prefix + "encoder.", out);
  head_.CollectParameters(prefix + "ctc_head.", out);
}

}  // namespace audiotext::rec
