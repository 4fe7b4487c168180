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

#ifndef AUDIOTEXT_INFERENCE_MODEL_IO_H_
#define AUDIOTEXT_INFERENCE_MODEL_IO_H_

#include <filesystem>
#include <memory>
#include <string_view>

#include "audiotext/io/named_table.h"
#include "audiotext/recognizer/recognizer.h"

namespace audiotext::inference {

// Checkpoint namespaces. Only kRecognizerPrefix is read by inference.
inline constexpr std::string_view kRecognizerPrefix = "rec/";
inline constexpr std::string_view kAudioPrefix = "audio/";

// Builds the default recognizer from the rec/ entries of a checkpoint.
// Every other entry is ignored.
std::unique_ptr<rec::Recognizer> LoadRecognizer(const io::NamedTable& checkpoint);
std::unique_ptr<rec::Recognizer> LoadRecognizer(const std::filesystem::path& checkpoint_path);

}  // namespace audiotext::inference

#endif  // AUDIOTEXT_INFERENCE_MODEL_IO_H_
