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

#include "audiotext/recognizer/metrics.h"

#include "audiotext/error.h"

namespace audiotext::rec {

double WordAccuracy(const std::vector<std::string>& predictions,
                    const std::vector<std::string>& references) {
  if (predictions.size() != references.size()) {
    throw Error(ErrorKind::kShapeMismatch, "word accuracy: " + std::to_string(predictions.size()) +
                                               " predictions vs " +
                                               std::to_string(references.size()) + " references");
  }
  if (predictions.empty()) throw Error(ErrorKind::kInvalidArgument, "word accuracy of an empty set");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) hits += predictions[i] == references[i];
  return static_cast<double>(hits) / static_cast<double>(predictions.size());
}

}  // namespace audiotext::rec
