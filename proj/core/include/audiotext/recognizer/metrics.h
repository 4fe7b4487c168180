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

#ifndef AUDIOTEXT_RECOGNIZER_METRICS_H_
#define AUDIOTEXT_RECOGNIZER_METRICS_H_

#include <string>
#include <vector>

namespace audiotext::rec {

// Exact-match fraction; lists must be non-empty and of equal length.
double WordAccuracy(const std::vector<std::string>& predictions,
                    const std::vector<std::string>& references);

}  // namespace audiotext::rec

#endif  // AUDIOTEXT_RECOGNIZER_METRICS_H_
