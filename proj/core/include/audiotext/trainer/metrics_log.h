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

#ifndef AUDIOTEXT_TRAINER_METRICS_LOG_H_
#define AUDIOTEXT_TRAINER_METRICS_LOG_H_

#include <filesystem>
#include <string>
#include <vector>

namespace audiotext::train {

struct EpochRow {
  int epoch = 0;
  double l_rec = 0.0;
  double l_mel = 0.0;  // nan for runs without the audio decoder
  double loss = 0.0;
  double acc_regular = 0.0;
  double acc_occluded = 0.0;
  double acc_noisy = 0.0;

  double MeanAccuracy() const { return (acc_regular + acc_occluded + acc_noisy) / 3.0; }
};

// Append-only, one row per epoch, epochs numbered from 1 without gaps.
class MetricsLog {
 public:
  static constexpr const char* kHeader =
      "epoch,l_rec,l_mel,loss,acc_regular,acc_occluded,acc_noisy";

  void Append(const EpochRow& row);
  const std::vector<EpochRow>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  const EpochRow& back() const { return rows_.back(); }

  std::string ToCsv() const;
  void Save(const std::filesystem::path& path) const;
  static MetricsLog Load(const std::filesystem::path& path);

 private:
  std::vector<EpochRow> rows_;
};

}  // namespace audiotext::train

#endif  // AUDIOTEXT_TRAINER_METRICS_LOG_H_
