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

#ifndef AUDIOTEXT_IO_MELT_H_
#define AUDIOTEXT_IO_MELT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace audiotext::io {

// A shape plus a row-major float64 payload. This is the in-memory form of a
// "MELT" block:
//
//   bytes 0..3   'M' 'E' 'L' 'T'
//   u32 LE       rank
//   u32 LE x rank  dims
//   f64 LE x prod(dims)  payload, row-major
struct RawTensor {
  std::vector<std::uint32_t> shape;
  std::vector<double> data;

  std::size_t NumElements() const;
};

void WriteMelt(std::ostream& out, const RawTensor& tensor);

// `context` is prepended to error messages (usually the file path).
RawTensor ReadMelt(std::istream& in, const std::string& context);

void SaveMelt(const std::filesystem::path& path, const RawTensor& tensor);
RawTensor LoadMelt(const std::filesystem::path& path);

// Little-endian primitives shared by the container formats.
void WriteU32(std::ostream& out, std::uint32_t value);
void WriteF64(std::ostream& out, double value);
std::uint32_t ReadU32(std::istream& in, const std::string& context);
double ReadF64(std::istream& in, const std::string& context);

}  // namespace audiotext::io

#endif  // AUDIOTEXT_IO_MELT_H_
