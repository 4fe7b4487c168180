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

#ifndef AUDIOTEXT_IO_WAV_H_
#define AUDIOTEXT_IO_WAV_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace audiotext::io {

// Decoded PCM-16 RIFF/WAVE file. Samples are interleaved by channel.
struct WavData {
  int sample_rate = 0;
  int channels = 0;
  std::vector<std::int16_t> interleaved;

  std::size_t NumFrames() const {
    return channels == 0 ? 0 : interleaved.size() / static_cast<std::size_t>(channels);
  }
};

// Only 16-bit little-endian PCM is accepted; unknown chunks are skipped.
WavData ReadWav(const std::filesystem::path& path);

void WriteWav(const std::filesystem::path& path, const WavData& wav);

// Float <-> PCM-16 conversion with a symmetric 32767 scale. Values outside
// [-1, 1] are clipped.
std::int16_t ToPcm16(double sample);
double FromPcm16(std::int16_t sample);

}  // namespace audiotext::io

#endif  // AUDIOTEXT_IO_WAV_H_
