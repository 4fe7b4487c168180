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

#include "audiotext/trainer/ablation.h"

#include <fmt/format.h>

#include "audiotext/error.h"
#include "audiotext/synthdata/speech.h"

namespace audiotext::train {
namespace {

double ParseDouble(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(ErrorKind::kInvalidArgument, "not a number: " + s);
  return v;
}

}  // namespace

AblationAxis ParseAxis(std::string_view name) {
  if (name == "layers") return AblationAxis::kLayers;
  if (name == "alpha") return AblationAxis::kAlpha;
  if (name == "format") return AblationAxis::kFormat;
  if (name == "voice") return AblationAxis::kVoice;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown ablation axis '" + std::string(name) + "' (layers|alpha|format|voice)");
}

std::string_view AxisName(AblationAxis axis) {
  switch (axis) {
    case AblationAxis::kLayers: return "layers";
    case AblationAxis::kAlpha: return "alpha";
    case AblationAxis::kFormat: return "format";
    case AblationAxis::kVoice: return "voice";
  }
  return "?";
}

std::vector<std::string> DefaultAxisValues(AblationAxis axis) {
  switch (axis) {
    case AblationAxis::kLayers: return {"1", "2", "3", "4"};
    case AblationAxis::kAlpha: return {"0.5", "1", "2"};
    case AblationAxis::kFormat: return {"mel", "linear"};
    case AblationAxis::kVoice: {
      std::vector<std::string> out;
      for (const auto& v : synth::AllVoiceProfiles()) out.emplace_back(v.name);
      return out;
    }
  }
  return {};
}

TrainConfig ApplyAxisValue(const TrainConfig& base, AblationAxis axis, const std::string& value) {
  TrainConfig cfg = base;
  cfg.with_audio = true;
  switch (axis) {
    case AblationAxis::kLayers: {
      const double n = ParseDouble(value);
      if (n != static_cast<double>(static_cast<std::size_t>(n))) {
        throw Error(ErrorKind::kInvalidArgument, "layers must be an integer: " + value);
      }
      cfg.n_layers = static_cast<std::size_t>(n);
      break;
    }
    case AblationAxis::kAlpha: cfg.alpha = ParseDouble(value); break;
    case AblationAxis::kFormat: cfg.format = dsp::ParseFormat(value); break;
    case AblationAxis::kVoice:
      synth::GetVoiceProfile(value);
      cfg.voice = value;
      break;
  }
  cfg.Validate();
  return cfg;
}

std::vector<AblationRow> RunAblation(const synth::Dataset& dataset, AblationAxis axis,
                                     const std::vector<std::string>& values,
                                     const TrainConfig& base, const ProgressFn& progress) {
  if (values.empty()) throw Error(ErrorKind::kInvalidArgument, "ablation needs at least one value");
  std::vector<TrainConfig> configs;
  for (const auto& v : values) configs.push_back(ApplyAxisValue(base, axis, v));
  const ImageData data = LoadImageData(dataset);
  std::vector<AblationRow> rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto targets = LoadAudioTargets(dataset, configs[i].format, configs[i].voice);
    TrainResult r = TrainRun(configs[i], data, &targets, progress);
    rows.push_back({std::string(AxisName(axis)), values[i], configs[i].seed, data.fingerprint,
                    r.log.back(), std::move(r.log)});
  }
  return rows;
}

std::string AblationTableCsv(const std::vector<AblationRow>& rows) {
  std::string out =
      "axis,value,seed,data_fingerprint,epochs,l_rec,l_mel,loss,acc_regular,acc_occluded,"
      "acc_noisy,acc_mean\n";
  for (const auto& r : rows) {
    const EpochRow& f = r.final;
    out += fmt::format("{},{},{},{:016x},{},{},{},{},{},{},{},{}\n", r.axis, r.value, r.seed,
                       r.data_fingerprint, f.epoch, f.l_rec, f.l_mel, f.loss, f.acc_regular,
                       f.acc_occluded, f.acc_noisy, f.MeanAccuracy());
  }
  return out;
}

}  // namespace audiotext::train
