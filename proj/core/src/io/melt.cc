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

#include "audiotext/io/melt.h"

#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "audiotext/error.h"

namespace audiotext::io {
namespace {

constexpr std::array<char, 4> kMagic = {'M', 'E', 'L', 'T'};
// Guards against absurd allocations when reading a corrupt header.
constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 32;
constexpr std::uint32_t kMaxRank = 16;

void ReadExact(std::istream& in, char* dst, std::size_t n,
               const std::string& context) {
  in.read(dst, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    throw Error(ErrorKind::kFormat, context + ": unexpected end of data");
  }
}

}  // namespace

std::size_t RawTensor::NumElements() const {
  std::size_t n = 1;
  for (auto d : shape) n *= d;
  return n;
}

void WriteU32(std::ostream& out, std::uint32_t value) {
  std::array<char, 4> bytes;
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

void WriteF64(std::ostream& out, double value) {
  const auto bits = std::bit_cast<std::uint64_t>(value);
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

std::uint32_t ReadU32(std::istream& in, const std::string& context) {
  std::array<char, 4> bytes;
  ReadExact(in, bytes.data(), bytes.size(), context);
  std::uint32_t value = 0;
  for (int i = 0; i < 4; ++i) {
    value |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
  }
  return value;
}

double ReadF64(std::istream& in, const std::string& context) {
  std::array<char, 8> bytes;
  ReadExact(in, bytes.data(), bytes.size(), context);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
  }
  return std::bit_cast<double>(bits);
}

void WriteMelt(std::ostream& out, const RawTensor& tensor) {
  if (tensor.NumElements() != tensor.data.size()) {
    throw Error(ErrorKind::kShapeMismatch,
                "MELT write: payload size does not match shape");
  }
  out.write(kMagic.data(), kMagic.size());
  WriteU32(out, static_cast<std::uint32_t>(tensor.shape.size()));
  for (auto d : tensor.shape) WriteU32(out, d);
  for (double v : tensor.data) WriteF64(out, v);
}

RawTensor ReadMelt(std::istream& in, const std::string& context) {
  std::array<char, 4> magic;
  ReadExact(in, magic.data(), magic.size(), context);
  if (magic != kMagic) {
    throw Error(ErrorKind::kFormat, context + ": bad magic bytes (expected MELT)");
  }
  RawTensor tensor;
  const std::uint32_t rank = ReadU32(in, context);
  if (rank > kMaxRank) {
    throw Error(ErrorKind::kFormat, context + ": implausible rank " + std::to_string(rank));
  }
  std::uint64_t count = 1;
  tensor.shape.resize(rank);
  for (auto& d : tensor.shape) {
    d = ReadU32(in, context);
    count *= d;
    if (count > kMaxElements) {
      throw Error(ErrorKind::kFormat, context + ": implausible tensor size");
    }
  }
  tensor.data.resize(static_cast<std::size_t>(count));
  for (auto& v : tensor.data) v = ReadF64(in, context);
  return tensor;
}

void SaveMelt(const std::filesystem::path& path, const RawTensor& tensor) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": cannot open for writing");
  WriteMelt(out, tensor);
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": write failed");
}

RawTensor LoadMelt(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, path.string() + ": cannot open for reading");
  return ReadMelt(in, path.string());
}

}  // namespace audiotext::io
