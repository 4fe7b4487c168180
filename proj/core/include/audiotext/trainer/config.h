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

#ifndef AUDIOTEXT_TRAINER_CONFIG_H_
#define AUDIOTEXT_TRAINER_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>

#include "audiotext/autograd/tensor.h"
#include "audiotext/dsp/dsp.h"

namespace audiotext::train {

struct TrainConfig {
  double alpha = 1.0;        // >= 0
  std::size_t n_layers = 3;  // in [1, 8]
  dsp::SpectrogramFormat format = dsp::SpectrogramFormat::kMel;
  std::string voice;  // empty selects the dataset's own voice
  double lr = 1e-3;
  std::size_t batch_size = 16;
  int epochs = 30;  // >= 1
  std::uint64_t seed = 0;
  bool with_audio = true;
  std::filesystem::path data_dir;
  std::filesystem::path out_dir;

  void Validate() const;
  // One key=value per line; excludes paths so snapshots are location independent.
  std::string Snapshot() const;
};

// L = l_rec + alpha * l_mel.
double JointLoss(double l_rec, double l_mel, double alpha);
// alpha == 0 returns l_rec itself, so the audio branch receives no gradient.
ag::Tensor JointLoss(const ag::Tensor& l_rec, const ag::Tensor& l_mel, double alpha);

}  // namespace audiotext::train

#endif  // AUDIOTEXT_TRAINER_CONFIG_H_
