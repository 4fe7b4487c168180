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

#ifndef AUDIOTEXT_SYNTHDATA_FONT_H_
#define AUDIOTEXT_SYNTHDATA_FONT_H_

#include <array>
#include <cstdint>

namespace audiotext::synth {

inline constexpr int kGlyphWidth = 5;
inline constexpr int kGlyphHeight = 7;

// Row bitmaps for letter `index` (0 = 'a'); bit 4 is the leftmost column.
const std::array<std::uint8_t, kGlyphHeight>& GlyphRows(int index);

inline bool GlyphPixel(int index, int row, int col) {
  return (GlyphRows(index)[row] >> (kGlyphWidth - 1 - col)) & 1u;
}

}  // namespace audiotext::synth

#endif  // AUDIOTEXT_SYNTHDATA_FONT_H_
