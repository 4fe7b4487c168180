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

#include "audiotext/io/pgm.h"

#include <cctype>
#include <fstream>
#include <string>

#include "audiotext/error.h"

namespace audiotext::io {
namespace {

int ReadHeaderInt(std::istream& in, const std::string& ctx) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  if (c == EOF || !std::isdigit(c)) throw Error(ErrorKind::kFormat, ctx + ": malformed PGM header");
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > (1 << 20)) throw Error(ErrorKind::kFormat, ctx + ": PGM dimension too large");
    c = in.get();
  }
  return value;
}

}  // namespace

void WritePgm(const std::filesystem::path& path, const GrayImage8& image) {
  if (image.pixels.size() != static_cast<std::size_t>(image.width) * image.height) {
    throw Error(ErrorKind::kShapeMismatch, "PGM write: pixel count does not match size");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": cannot open for writing");
  const std::string header =
      "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": write failed");
}

GrayImage8 ReadPgm(const std::filesystem::path& path) {
  const std::string ctx = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, ctx + ": cannot open for reading");
  char p = 0, five = 0;
  in.get(p);
  in.get(five);
  if (p != 'P' || five != '5') throw Error(ErrorKind::kFormat, ctx + ": not a binary PGM (P5)");
  GrayImage8 image;
  image.width = ReadHeaderInt(in, ctx);
  image.height = ReadHeaderInt(in, ctx);
  const int maxval = ReadHeaderInt(in, ctx);
  if (maxval != 255) throw Error(ErrorKind::kFormat, ctx + ": only 8-bit PGM is supported");
  image.pixels.resize(static_cast<std::size_t>(image.width) * image.height);
  in.read(reinterpret_cast<char*>(image.pixels.data()),
          static_cast<std::streamsize>(image.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != image.pixels.size()) {
    throw Error(ErrorKind::kFormat, ctx + ": truncated PGM payload");
  }
  return image;
}

}  // namespace audiotext::io
