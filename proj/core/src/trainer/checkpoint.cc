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

#include "audiotext/trainer/checkpoint.h"

#include <fmt/format.h>

#include "audiotext/error.h"
#include "audiotext/inference/model_io.h"

namespace audiotext::train {
namespace {

constexpr std::string_view kFirstMoment = "optim/m/";
constexpr std::string_view kSecondMoment = "optim/v/";
constexpr std::string_view kStep = "optim/step";
constexpr std::string_view kEpoch = "meta/epoch";
constexpr std::string_view kConfig = "meta/config";

io::RawTensor Flat(const std::vector<double>& v) {
  return {{static_cast<std::uint32_t>(v.size())}, v};
}

}  // namespace

io::NamedTable BuildCheckpoint(const nn::ParameterList& params, const ag::Adam& adam,
                               const CheckpointMeta& meta) {
  if (params.size() != adam.params().size()) {
    throw Error(ErrorKind::kState, "checkpoint: parameter list does not match the optimizer");
  }
  io::NamedTable table;
  nn::StoreParameters(params, table);
  for (std::size_t i = 0; i < params.size(); ++i) {
    table.PutTensor(std::string(kFirstMoment) + params[i].name, Flat(adam.first_moments()[i]));
    table.PutTensor(std::string(kSecondMoment) + params[i].name, Flat(adam.second_moments()[i]));
  }
  table.PutText(std::string(kStep), std::to_string(adam.step()));
  table.PutText(std::string(kEpoch), std::to_string(meta.epoch));
  table.PutText(std::string(kConfig), meta.config);
  return table;
}

CheckpointMeta RestoreCheckpoint(const io::NamedTable& table, const nn::ParameterList& params,
                                 ag::Adam* adam) {
  nn::LoadParameters(params, table);
  CheckpointMeta meta;
  const auto epoch = table.FindText(kEpoch);
  const auto step = table.FindText(kStep);
  if (!epoch || !step) throw Error(ErrorKind::kFormat, "checkpoint lacks meta/epoch or optim/step");
  meta.epoch = std::stoi(*epoch);
  meta.config = table.FindText(kConfig).value_or("");
  if (adam == nullptr) return meta;
  std::vector<std::vector<double>> m, v;
  for (const auto& p : params) {
    const auto* mt = table.FindTensor(std::string(kFirstMoment) + p.name);
    const auto* vt = table.FindTensor(std::string(kSecondMoment) + p.name);
    if (mt == nullptr || vt == nullptr) {
      throw Error(ErrorKind::kFormat, "checkpoint lacks optimizer state for " + p.name);
    }
    m.push_back(mt->data);
    v.push_back(vt->data);
  }
  adam->SetState(std::stoull(*step), std::move(m), std::move(v));
  return meta;
}

std::size_t StripAudio(io::NamedTable& table) {
  const std::string audio(inference::kAudioPrefix);
  return table.RemovePrefix(audio) + table.RemovePrefix(std::string(kFirstMoment) + audio) +
         table.RemovePrefix(std::string(kSecondMoment) + audio);
}

}  // namespace audiotext::train
