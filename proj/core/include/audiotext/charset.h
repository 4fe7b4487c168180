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

#ifndef AUDIOTEXT_CHARSET_H_
#define AUDIOTEXT_CHARSET_H_

#include <string_view>

namespace audiotext {

inline constexpr std::string_view kCharset = "abcdefghijklmnopqrstuvwxyz";

// Letter index in [0, 26), or -1 when `c` is outside the charset.
constexpr int CharIndex(char c) {
  return (c >= 'a' && c <= 'z') ? c - 'a' : -1;
}

constexpr bool InCharset(std::string_view s) {
  for (char c : s) {
    if (CharIndex(c) < 0) return false;
  }
  return true;
}

}  // namespace audiotext

#endif  // AUDIOTEXT_CHARSET_H_
