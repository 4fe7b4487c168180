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

#include "audiotext/inference/model_io.h"

#include "audiotext/nn/parameters.h"

namespace audiotext::inference {

std::unique_ptr<rec::Recognizer> LoadRecognizer(const io::NamedTable& checkpoint) {
  Rng unused(0);
  auto model = std::make_unique<rec::Recognizer>(rec::ImageEncoderConfig{}, unused);
  nn::LoadParameters(model->Parameters(std::string(kRecognizerPrefix)), checkpoint);
  return model;
}

std::unique_ptr<rec::Recognizer> LoadRecognizer(const std::filesystem::path& checkpoint_path) {
  return LoadRecognizer(io::NamedTable::Load(checkpoint_path));
}

}  // namespace audiotext::inference
