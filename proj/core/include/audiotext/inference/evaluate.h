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

#ifndef AUDIOTEXT_INFERENCE_EVALUATE_H_
#define AUDIOTEXT_INFERENCE_EVALUATE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "audiotext/recognizer/recognizer.h"
#include "audiotext/synthdata/dataset.h"

namespace audiotext::inference {

// Fixed evaluation batch; results do not depend on the caller.
inline constexpr std::size_t kEvalBatchSize = 32;

struct LabeledImages {
  synth::Split split = synth::Split::kRegular;
  std::vector<std::string> ids;
  std::vector<std::string> labels;
  std::vector<Matrix> images;
};

struct Prediction {
  std::string id;
  std::string prediction;
  std::string reference;
};

struct SplitResult {
  synth::Split split = synth::Split::kRegular;
  double accuracy = 0.0;
  std::vector<Prediction> predictions;
};

// Throws when the split has no records.
LabeledImages LoadSplit(const synth::Dataset& dataset, synth::Split split);

std::vector<std::string> PredictBatched(const rec::Recognizer& model,
                                        const std::vector<Matrix>& images);

SplitResult EvaluateSplit(const rec::Recognizer& model, const LabeledImages& data);

std::vector<SplitResult> EvaluateModel(const rec::Recognizer& model, const synth::Dataset& dataset,
                                       const std::vector<synth::Split>& splits);

// Tab-separated split, id, prediction, reference with a header row.
void WritePredictionsTsv(const std::filesystem::path& path, const std::vector<SplitResult>& results);

}  // namespace audiotext::inference

#endif  // AUDIOTEXT_INFERENCE_EVALUATE_H_
