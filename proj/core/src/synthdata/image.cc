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

#include "audiotext/synthdata/image.h"

#include <algorithm>
#include <cmath>

#include "audiotext/charset.h"
#include "audiotext/error.h"
#include "audiotext/synthdata/font.h"

namespace audiotext::synth {
namespace {

constexpr int kMargin = 2;
constexpr int kMaxScale = 4;

void BoxBlur(Matrix& img) {
  const int h = static_cast<int>(img.rows());
  const int w = static_cast<int>(img.cols());
  Matrix out(img.rows(), img.cols());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int yy = std::clamp(y + dy, 0, h - 1);
          const int xx = std::clamp(x + dx, 0, w - 1);
          acc += img(yy, xx);
        }
      }
      out(y, x) = acc / 9.0;
    }
  }
  img = std::move(out);
}

}  // namespace

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kRegular:
      return "regular";
    case Split::kOccluded:
      return "occluded";
    case Split::kNoisy:
      return "noisy";
  }
  return "unknown";
}

Split ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "regular") return Split::kRegular;
  if (name == "occluded") return Split::kOccluded;
  if (name == "noisy") return Split::kNoisy;
  throw Error(ErrorKind::kInvalidArgument, "unknown split '" + std::string(name) + "'");
}

void CorruptionSpec::Validate() const {
  if (!(noise_sigma >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "noise_sigma must be >= 0");
  if (!(occlusion_frac >= 0.0 && occlusion_frac <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "occlusion_frac must lie in [0, 1]");
  }
  if (blur_passes < 0 || blur_passes > 4) {
    throw Error(ErrorKind::kInvalidArgument, "blur_passes must lie in [0, 4]");
  }
}

CorruptionSpec CorruptionSpec::Regular() { return {Split::kRegular, 0.0, 0.0, 0, -1}; }

CorruptionSpec CorruptionSpec::Occluded() { return {Split::kOccluded, 0.05, 0.6, 0, -1}; }

CorruptionSpec CorruptionSpec::Noisy() { return {Split::kNoisy, 0.35, 0.0, 1, -1}; }

CorruptionSpec CorruptionSpec::ForTestSplit(Split split) {
  switch (split) {
    case Split::kRegular:
      return Regular();
    case Split::kOccluded:
      return Occluded();
    case Split::kNoisy:
      return Noisy();
    case Split::kTrain:
      break;
  }
  throw Error(ErrorKind::kInvalidArgument, "train split has no fixed corruption preset");
}

CorruptionSpec CorruptionSpec::SampleTrain(Rng& rng) {
  CorruptionSpec spec;
  spec.split = Split::kTrain;
  const double style = rng.Uniform();
  if (style < 0.5) {
    spec.noise_sigma = rng.Uniform(0.0, 0.1);
  } else if (style < 0.75) {
    spec.noise_sigma = rng.Uniform(0.0, 0.05);
    spec.occlusion_frac = rng.Uniform(0.2, 0.5);
  } else {
    spec.noise_sigma = rng.Uniform(0.15, 0.3);
    spec.blur_passes = static_cast<int>(rng.UniformInt(2));
  }
  return spec;
}

RasterizedWord RasterizeWord(std::string_view label) {
  if (label.empty()) throw Error(ErrorKind::kInvalidArgument, "empty label");
  if (!InCharset(label)) throw Error(ErrorKind::kInvalidArgument, "label outside charset a-z");
  const int n = static_cast<int>(label.size());
  const int units_wide = n * (kGlyphWidth + 1) - 1;
  const int scale = std::min({(kImageWidth - 2 * kMargin) / units_wide,
                              (kImageHeight - 2 * kMargin) / kGlyphHeight, kMaxScale});
  if (scale < 1) throw Error(ErrorKind::kInvalidArgument, "label exceeds canvas");

  RasterizedWord out{Matrix(kImageHeight, kImageWidth, 0.0), {}};
  const int x0 = (kImageWidth - units_wide * scale) / 2;
  const int y0 = (kImageHeight - kGlyphHeight * scale) / 2;
  for (int i = 0; i < n; ++i) {
    const int glyph = CharIndex(label[i]);
    GlyphBox box{x0 + i * (kGlyphWidth + 1) * scale, y0, kGlyphWidth * scale,
                 kGlyphHeight * scale};
    for (int r = 0; r < kGlyphHeight; ++r) {
      for (int c = 0; c < kGlyphWidth; ++c) {
        if (!GlyphPixel(glyph, r, c)) continue;
        for (int dy = 0; dy < scale; ++dy) {
          for (int dx = 0; dx < scale; ++dx) {
            out.pixels(box.y + r * scale + dy, box.x + c * scale + dx) = kInkValue;
          }
        }
      }
    }
    out.glyphs.push_back(box);
  }
  return out;
}

Matrix RenderWordImage(std::string_view label, const CorruptionSpec& corruption,
                       std::uint64_t seed) {
  corruption.Validate();
  RasterizedWord word = RasterizeWord(label);
  Matrix img = std::move(word.pixels);
  Rng rng(seed);

  if (corruption.noise_sigma > 0.0) {
    for (double& v : img.data()) {
      v = std::clamp(v + rng.Normal(0.0, corruption.noise_sigma), 0.0, 1.0);
    }
  }

  if (corruption.occlusion_frac > 0.0) {
    int g = corruption.occluded_glyph;
    if (g < 0) {
      g = static_cast<int>(rng.UniformInt(word.glyphs.size()));
    } else if (g >= static_cast<int>(word.glyphs.size())) {
      throw Error(ErrorKind::kInvalidArgument, "occluded_glyph beyond label length");
    }
    const GlyphBox& box = word.glyphs[g];
    const int cover = std::clamp(
        static_cast<int>(std::ceil(corruption.occlusion_frac * box.width)), 1, box.width);
    const int offset = static_cast<int>(rng.UniformInt(box.width - cover + 1));
    for (int y = box.y; y < box.y + box.height; ++y) {
      for (int x = box.x + offset; x < box.x + offset + cover; ++x) img(y, x) = kOccluderValue;
    }
  }

  for (int i = 0; i < corruption.blur_passes; ++i) BoxBlur(img);
  return img;
}

io::GrayImage8 ToGray8(const Matrix& image) {
  io::GrayImage8 out;
  out.height = static_cast<int>(image.rows());
  out.width = static_cast<int>(image.cols());
  out.pixels.reserve(image.size());
  for (double v : image.data()) {
    out.pixels.push_back(static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)));
  }
  return out;
}

Matrix FromGray8(const io::GrayImage8& image) {
  Matrix out(static_cast<std::size_t>(image.height), static_cast<std::size_t>(image.width));
  for (std::size_t i = 0; i < image.pixels.size(); ++i) out.data()[i] = image.pixels[i] / 255.0;
  return out;
}

}  // namespace audiotext::synth
