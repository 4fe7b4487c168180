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

#include "audiotext/synthdata/font.h"

#include "audiotext/error.h"

namespace audiotext::synth {
namespace {

// Classic 5x7 capital-letter matrix font.
constexpr std::array<std::array<std::uint8_t, kGlyphHeight>, 26> kGlyphs = {{
    {0x0E, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11},  // a
    {0x1E, 0x11, 0x11, 0x1E, 0x11, 0x11, 0x1E},  // b
    {0x0E, 0x11, 0x10, 0x10, 0x10, 0x11, 0x0E},  // c
    {0x1C, 0x12, 0x11, 0x11, 0x11, 0x12, 0x1C},  // d
    {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x1F},  // e
    {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x10},  // f
    {0x0E, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0F},  // g
    {0x11, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11},  // h
    {0x0E, 0x04, 0x04, 0x04, 0x04, 0x04, 0x0E},  // i
    {0x07, 0x02, 0x02, 0x02, 0x02, 0x12, 0x0C},  // j
    {0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11},  // k
    {0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1F},  // l
    {0x11, 0x1B, 0x15, 0x15, 0x11, 0x11, 0x11},  // m
    {0x11, 0x11, 0x19, 0x15, 0x13, 0x11, 0x11},  // n
    {0x0E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E},  // o
    {0x1E, 0x11, 0x11, 0x1E, 0x10, 0x10, 0x10},  // p
    {0x0E, 0x11, 0x11, 0x11, 0x15, 0x12, 0x0D},  // q
    {0x1E, 0x11, 0x11, 0x1E, 0x14, 0x12, 0x11},  // r
    {0x0F, 0x10, 0x10, 0x0E, 0x01, 0x01, 0x1E},  // s
    {0x1F, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04},  // t
    {0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E},  // u
    {0x11, 0x11, 0x11, 0x11, 0x11, 0x0A, 0x04},  // v
    {0x11, 0x11, 0x11, 0x15, 0x15, 0x15, 0x0A},  // w
    {0x11, 0x11, 0x0A, 0x04, 0x0A, 0x11, 0x11},  // x
    {0x11, 0x11, 0x11, 0x0A, 0x04, 0x04, 0x04},  // y
    {0x1F, 0x01, 0x02, 0x04, 0x08, 0x10, 0x1F},  // z
}};

}  // namespace

const std::array<std::uint8_t, kGlyphHeight>& GlyphRows(int index) {
  if (index < 0 || index >= 26) {
    throw Error(ErrorKind::kInvalidArgument, "glyph index out of range");
  }
  return kGlyphs[index];
}

}  // namespace audiotext::synth
