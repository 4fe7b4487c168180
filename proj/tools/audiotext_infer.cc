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

// Word recognition on a dataset split from a checkpoint, without training code.

#include <cstdio>

#include "audiotext/inference/evaluate.h"
#include "audiotext/inference/model_io.h"
#include "cli_common.h"

int main(int argc, char** argv) {
  using namespace audiotext;
  CLI::App app{"Evaluate a recognizer checkpoint"};
  std::string ckpt, data, splits = "regular,occluded,noisy", predictions;
  app.add_option("--ckpt", ckpt, "checkpoint file")->required();
  app.add_option("--data", data, "dataset directory or manifest")->required();
  app.add_option("--splits", splits, "comma-separated splits");
  app.add_option("--predictions", predictions, "write id/prediction/reference TSV here");
  return cli::RunApp(app, argc, argv, [&] {
    const auto model = inference::LoadRecognizer(std::filesystem::path(ckpt));
    const auto dataset = synth::Dataset::Load(data);
    const auto results = inference::EvaluateModel(*model, dataset, cli::ParseSplits(splits));
    for (const auto& r : results) {
      std::printf("split=%s accuracy=%.6f n=%zu\n", std::string(synth::SplitName(r.split)).c_str(),
                  r.accuracy, r.predictions.size());
    }
    if (!predictions.empty()) inference::WritePredictionsTsv(predictions, results);
  });
}
