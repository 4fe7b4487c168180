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

#ifndef AUDIOTEXT_TRAINER_TRAIN_H_
#define AUDIOTEXT_TRAINER_TRAIN_H_

#include <functional>
#include <string>
#include <vector>

#include "audiotext/inference/evaluate.h"
#include "audiotext/io/named_table.h"
#include "audiotext/recognizer/ctc.h"
#include "audiotext/trainer/config.h"
#include "audiotext/trainer/metrics_log.h"

namespace audiotext::train {

inline constexpr const char* kMetricsFileName = "metrics.csv";
inline constexpr const char* kCheckpointFileName = "checkpoint.mckp";

// Images and labels shared by every run on one dataset.
struct ImageData {
  std::vector<Matrix> train_images;
  std::vector<std::string> train_labels;
  std::vector<inference::LabeledImages> test_splits;  // regular, occluded, noisy
  std::uint64_t fingerprint = 0;                      // hash of the manifest bytes
};

ImageData LoadImageData(const synth::Dataset& dataset);

// Normalized spectrogram targets aligned with ImageData::train_images. A voice
// other than the dataset's is re-synthesized from the labels with statistics
// over the resulting training targets.
std::vector<Matrix> LoadAudioTargets(const synth::Dataset& dataset, dsp::SpectrogramFormat format,
                                     const std::string& voice);

struct TrainResult {
  MetricsLog log;
  io::NamedTable checkpoint;
};

using ProgressFn = std::function<void(const EpochRow&)>;

// `targets` may be null only when cfg.with_audio is false.
TrainResult TrainRun(const TrainConfig& cfg, const ImageData& data,
                     const std::vector<Matrix>* targets, const ProgressFn& progress = {});

// Loads cfg.data_dir, trains, and writes metrics.csv and checkpoint.mckp to cfg.out_dir.
TrainResult TrainAndSave(const TrainConfig& cfg, const ProgressFn& progress = {});

}  // namespace audiotext::train

#endif  // AUDIOTEXT_TRAINER_TRAIN_H_
