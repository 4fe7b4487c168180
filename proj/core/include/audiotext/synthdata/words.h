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

#ifndef AUDIOTEXT_SYNTHDATA_WORDS_H_
#define AUDIOTEXT_SYNTHDATA_WORDS_H_

#include <span>
#include <string_view>

namespace audiotext::synth {

// 1000 distinct lowercase English words of 3-8 letters.
std::span<const std::string_view> WordList();

}  // namespace audiotext::synth

#endif  // AUDIOTEXT_SYNTHDATA_WORDS_H_
