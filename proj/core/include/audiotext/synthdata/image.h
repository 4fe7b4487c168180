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

#ifndef AUDIOTEXT_SYNTHDATA_IMAGE_H_
#define AUDIOTEXT_SYNTHDATA_IMAGE_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "audiotext/io/pgm.h"
#include "audiotext/matrix.h"
#include "audiotext/rng.h"

namespace audiotext::synth {

inline constexpr int kImageHeight = 32;
inline constexpr int kImageWidth = 128;
inline constexpr double kInkValue = 1.0;
inline constexpr double kOccluderValue = 0.5;

enum class Split { kTrain, kRegular, kOccluded, kNoisy };

std::string_view SplitName(Split split);
Split ParseSplit(std::string_view name);

struct CorruptionSpec {
  Split split = Split::kRegular;
  double noise_sigma = 0.0;     // gray-level std of additive Gaussian noise
  double occlusion_frac = 0.0;  // fraction of one glyph's width covered
  int blur_passes = 0;          // 3x3 box filter applications
  int occluded_glyph = -1;      // -1 picks a glyph from the seed

  void Validate() const;

  // Fixed per-split test presets.
  static CorruptionSpec Regular();
  static CorruptionSpec Occluded();
  static CorruptionSpec Noisy();
  static CorruptionSpec ForTestSplit(Split split);

  // Training images mix all three styles with randomized strength.
  static CorruptionSpec SampleTrain(Rng& rng);
};

struct GlyphBox {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;
};

struct RasterizedWord {
  Matrix pixels;  // [32, 128], ink 1 on background 0
  std::vector<GlyphBox> glyphs;
};

// Glyphs are scaled by the largest integer factor that fits and centered.
RasterizedWord RasterizeWord(std::string_view label);

// Rasterize, then noise (clipped to [0, 1]), occlusion, blur.
Matrix RenderWordImage(std::string_view label, const CorruptionSpec& corruption,
                       std::uint64_t seed);

io::GrayImage8 ToGray8(const Matrix& image);
Matrix FromGray8(const io::GrayImage8& image);

}  // namespace audiotext::synth

#endif  // AUDIOTEXT_SYNTHDATA_IMAGE_H_
