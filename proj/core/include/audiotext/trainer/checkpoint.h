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

#ifndef AUDIOTEXT_TRAINER_CHECKPOINT_H_
#define AUDIOTEXT_TRAINER_CHECKPOINT_H_

#include <string>

#include "audiotext/autograd/adam.h"
#include "audiotext/io/named_table.h"
#include "audiotext/nn/parameters.h"

namespace audiotext::train {

// Layout: rec/<param>, audio/<param>, optim/m/<ns>/<param>, optim/v/<ns>/<param>,
// optim/step, meta/epoch, meta/config.
struct CheckpointMeta {
  int epoch = 0;
  std::string config;
};

// `params` hold fully prefixed names and match the optimizer's parameter order.
io::NamedTable BuildCheckpoint(const nn::ParameterList& params, const ag::Adam& adam,
                               const CheckpointMeta& meta);

// Loads parameter values and, when `adam` is non-null, optimizer state.
CheckpointMeta RestoreCheckpoint(const io::NamedTable& table, const nn::ParameterList& params,
                                 ag::Adam* adam);

// Removes audio parameters and their optimizer state; returns the count removed.
std::size_t StripAudio(io::NamedTable& table);

}  // namespace audiotext::train

#endif  // AUDIOTEXT_TRAINER_CHECKPOINT_H_
