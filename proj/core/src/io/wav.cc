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

#include "audiotext/io/wav.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>

#include "audiotext/error.h"
#include "audiotext/io/melt.h"

namespace audiotext::io {
namespace {

std::uint16_t ReadU16(std::istream& in, const std::string& ctx) {
  std::array<unsigned char, 2> b{};
  in.read(reinterpret_cast<char*>(b.data()), 2);
  if (in.gcount() != 2) throw Error(ErrorKind::kFormat, ctx + ": truncated WAV header");
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

void WriteU16(std::ostream& out, std::uint16_t v) {
  out.put(static_cast<char>(v & 0xFF));
  out.put(static_cast<char>((v >> 8) & 0xFF));
}

bool ReadTag(std::istream& in, std::array<char, 4>& tag) {
  in.read(tag.data(), 4);
  return in.gcount() == 4;
}

}  // namespace

std::int16_t ToPcm16(double sample) {
  const double clipped = std::clamp(sample, -1.0, 1.0);
  return static_cast<std::int16_t>(std::lround(clipped * 32767.0));
}

double FromPcm16(std::int16_t sample) {
  return std::max(-1.0, static_cast<double>(sample) / 32767.0);
}

WavData ReadWav(const std::filesystem::path& path) {
  const std::string ctx = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, ctx + ": cannot open for reading");

  std::array<char, 4> tag{};
  if (!ReadTag(in, tag) || std::memcmp(tag.data(), "RIFF", 4) != 0) {
    throw Error(ErrorKind::kFormat, ctx + ": not a RIFF file");
  }
  ReadU32(in, ctx);
  if (!ReadTag(in, tag) || std::memcmp(tag.data(), "WAVE", 4) != 0) {
    throw Error(ErrorKind::kFormat, ctx + ": not a WAVE file");
  }

  WavData wav;
  bool have_fmt = false;
  while (ReadTag(in, tag)) {
    const std::uint32_t size = ReadU32(in, ctx);
    if (std::memcmp(tag.data(), "fmt ", 4) == 0) {
      const auto format = ReadU16(in, ctx);
      wav.channels = ReadU16(in, ctx);
      wav.sample_rate = static_cast<int>(ReadU32(in, ctx));
      ReadU32(in, ctx);  // byte rate
      ReadU16(in, ctx);  // block align
      const auto bits = ReadU16(in, ctx);
      if (format != 1 || bits != 16) {
        throw Error(ErrorKind::kFormat, ctx + ": only PCM 16-bit WAV is supported");
      }
      if (wav.channels < 1) throw Error(ErrorKind::kFormat, ctx + ": zero channels");
      in.seekg(size - 16 + (size & 1), std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag.data(), "data", 4) == 0) {
      if (!have_fmt) throw Error(ErrorKind::kFormat, ctx + ": data chunk before fmt chunk");
      const std::size_t n = size / 2;
      wav.interleaved.resize(n);
      for (auto& s : wav.interleaved) s = static_cast<std::int16_t>(ReadU16(in, ctx));
      const std::size_t usable = (n / wav.channels) * wav.channels;
      wav.interleaved.resize(usable);
      return wav;
    } else {
      in.seekg(size + (size & 1), std::ios::cur);
    }
  }
  throw Error(ErrorKind::kFormat, ctx + ": no data chunk");
}

void WriteWav(const std::filesystem::path& path, const WavData& wav) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": cannot open for writing");
  const auto data_bytes = static_cast<std::uint32_t>(wav.interleaved.size() * 2);
  const auto block_align = static_cast<std::uint16_t>(wav.channels * 2);
  out.write("RIFF", 4);
  WriteU32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  WriteU32(out, 16);
  WriteU16(out, 1);
  WriteU16(out, static_cast<std::uint16_t>(wav.channels));
  WriteU32(out, static_cast<std::uint32_t>(wav.sample_rate));
  WriteU32(out, static_cast<std::uint32_t>(wav.sample_rate) * block_align);
  WriteU16(out, block_align);
  WriteU16(out, 16);
  out.write("data", 4);
  WriteU32(out, data_bytes);
  for (auto s : wav.interleaved) WriteU16(out, static_cast<std::uint16_t>(s));
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": write failed");
}

}  // namespace audiotext::io
