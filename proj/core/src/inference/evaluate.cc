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

#include "audiotext/inference/evaluate.h"

#include <fstream>

#include "audiotext/error.h"
#include "audiotext/recognizer/metrics.h"

namespace audiotext::inference {

LabeledImages LoadSplit(const synth::Dataset& dataset, synth::Split split) {
  LabeledImages out;
  out.split = split;
  for (const synth::SampleRecord* r : dataset.Records(split)) {
    out.ids.push_back(r->id);
    out.labels.push_back(r->label);
    out.images.push_back(dataset.LoadImage(*r));
  }
  if (out.images.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "split " + std::string(synth::SplitName(split)) + " has no records");
  }
  return out;
}

std::vector<std::string> PredictBatched(const rec::Recognizer& model,
                                        const std::vector<Matrix>& images) {
  std::vector<std::string> out;
  out.reserve(images.size());
  for (std::size_t begin = 0; begin < images.size(); begin += kEvalBatchSize) {
    const std::size_t end = std::min(images.size(), begin + kEvalBatchSize);
    std::vector<const Matrix*> batch;
    for (std::size_t i = begin; i < end; ++i) batch.push_back(&images[i]);
    for (auto& p : model.Predict(rec::StackImages(batch))) out.push_back(std::move(p));
  }
  return out;
}

SplitResult EvaluateSplit(const rec::Recognizer& model, const LabeledImages& data) {
  SplitResult result;
  result.split = data.split;
  const auto preds = PredictBatched(model, data.images);
  result.accuracy = rec::WordAccuracy(preds, data.labels);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    result.predictions.push_back({data.ids[i], preds[i], data.labels[i]});
  }
  return result;
}

std::vector<SplitResult> EvaluateModel(const rec::Recognizer& model, const synth::Dataset& dataset,
                                       const std::vector<synth::Split>& splits) {
  std::vector<SplitResult> out;
  for (synth::Split s : splits) out.push_back(EvaluateSplit(model, LoadSplit(dataset, s)));
  return out;
}

void WritePredictionsTsv(const std::filesystem::path& path,
                         const std::vector<SplitResult>& results) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << "split\tid\tprediction\treference\n";
  for (const auto& r : results) {
    for (const auto& p : r.predictions) {
      out << synth::SplitName(r.split) << '\t' << p.id << '\t' << p.prediction << '\t'
          << p.reference << '\n';
    }
  }
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

}  // namespace audiotext::inference
