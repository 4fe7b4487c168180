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

#ifndef AUDIOTEXT_IO_PGM_H_
#define AUDIOTEXT_IO_PGM_H_

#include <cstdint>
#include <filesystem>
#include <vector>

namespace audiotext::io {

// Binary (P5) 8-bit graymap, row-major.
struct GrayImage8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

void WritePgm(const std::filesystem::path& path, const GrayImage8& image);
GrayImage8 ReadPgm(const std::filesystem::path& path);

}  // namespace audiotext::io

#endif  // AUDIOTEXT_IO_PGM_H_
