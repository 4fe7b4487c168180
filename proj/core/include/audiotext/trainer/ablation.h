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

#ifndef AUDIOTEXT_TRAINER_ABLATION_H_
#define AUDIOTEXT_TRAINER_ABLATION_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "audiotext/trainer/train.h"

namespace audiotext::train {

enum class AblationAxis { kLayers, kAlpha, kFormat, kVoice };

AblationAxis ParseAxis(std::string_view name);
std::string_view AxisName(AblationAxis axis);

// Layers {1,2,3,4}, alpha {0.5,1,2}, format {mel,linear}, voice: all profiles.
std::vector<std::string> DefaultAxisValues(AblationAxis axis);

// Copy of `base` with the axis set to `value`; throws on an invalid value.
TrainConfig ApplyAxisValue(const TrainConfig& base, AblationAxis axis, const std::string& value);

struct AblationRow {
  std::string axis;
  std::string value;
  std::uint64_t seed = 0;
  std::uint64_t data_fingerprint = 0;
  EpochRow final;
  MetricsLog log;
};

// One audio-guided run per value on shared images and seed.
std::vector<AblationRow> RunAblation(const synth::Dataset& dataset, AblationAxis axis,
                                     const std::vector<std::string>& values,
                                     const TrainConfig& base, const ProgressFn& progress = {});

// Comma-separated table with a header row, one line per value.
std::string AblationTableCsv(const std::vector<AblationRow>& rows);

}  // namespace audiotext::train

#endif  // AUDIOTEXT_TRAINER_ABLATION_H_
