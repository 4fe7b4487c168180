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

#include "audiotext/io/named_table.h"

#include <algorithm>
#include <array>
#include <fstream>

#include "audiotext/error.h"

namespace audiotext::io {
namespace {

constexpr std::array<char, 4> kMagic = {'M', 'C', 'K', 'P'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kMaxNameLength = 4096;
constexpr std::uint32_t kMaxTextLength = 1u << 24;

std::string ReadString(std::istream& in, std::uint32_t length,
                       const std::string& context) {
  std::string s(length, '\0');
  in.read(s.data(), length);
  if (static_cast<std::uint32_t>(in.gcount()) != length) {
    throw Error(ErrorKind::kFormat, context + ": truncated string");
  }
  return s;
}

}  // namespace

void NamedTable::PutTensor(std::string name, RawTensor tensor) {
  if (auto* e = FindEntry(name)) {
    e->value = std::move(tensor);
    return;
  }
  entries_.push_back({std::move(name), std::move(tensor)});
}

void NamedTable::PutText(std::string name, std::string text) {
  if (auto* e = FindEntry(name)) {
    e->value = std::move(text);
    return;
  }
  entries_.push_back({std::move(name), std::move(text)});
}

NamedTable::Entry* NamedTable::FindEntry(std::string_view name) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const Entry& e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

const NamedTable::Entry* NamedTable::FindEntry(std::string_view name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const Entry& e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

const RawTensor* NamedTable::FindTensor(std::string_view name) const {
  const Entry* e = FindEntry(name);
  return e == nullptr ? nullptr : std::get_if<RawTensor>(&e->value);
}

std::optional<std::string> NamedTable::FindText(std::string_view name) const {
  const Entry* e = FindEntry(name);
  if (e == nullptr) return std::nullopt;
  if (const auto* s = std::get_if<std::string>(&e->value)) return *s;
  return std::nullopt;
}

bool NamedTable::Contains(std::string_view name) const {
  return FindEntry(name) != nullptr;
}

std::size_t NamedTable::RemovePrefix(std::string_view prefix) {
  const auto before = entries_.size();
  std::erase_if(entries_, [&](const Entry& e) { return e.name.starts_with(prefix); });
  return before - entries_.size();
}

std::size_t NamedTable::CountPrefix(std::string_view prefix) const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(),
      [&](const Entry& e) { return e.name.starts_with(prefix); }));
}

void NamedTable::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": cannot open for writing");
  out.write(kMagic.data(), kMagic.size());
  WriteU32(out, kVersion);
  WriteU32(out, static_cast<std::uint32_t>(entries_.size()));
  for (const auto& e : entries_) {
    WriteU32(out, static_cast<std::uint32_t>(e.name.size()));
    out.write(e.name.data(), static_cast<std::streamsize>(e.name.size()));
    if (const auto* t = std::get_if<RawTensor>(&e.value)) {
      out.put(0);
      WriteMelt(out, *t);
    } else {
      const auto& s = std::get<std::string>(e.value);
      out.put(1);
      WriteU32(out, static_cast<std::uint32_t>(s.size()));
      out.write(s.data(), static_cast<std::streamsize>(s.size()));
    }
  }
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": write failed");
}

NamedTable NamedTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, path.string() + ": cannot open for reading");
  const std::string ctx = path.string();
  std::array<char, 4> magic;
  in.read(magic.data(), magic.size());
  if (in.gcount() != 4 || magic != kMagic) {
    throw Error(ErrorKind::kFormat, ctx + ": bad magic bytes (expected MCKP)");
  }
  const auto version = ReadU32(in, ctx);
  if (version != kVersion) {
    throw Error(ErrorKind::kFormat, ctx + ": unsupported version " + std::to_string(version));
  }
  const auto count = ReadU32(in, ctx);
  NamedTable table;
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto name_len = ReadU32(in, ctx);
    if (name_len > kMaxNameLength) throw Error(ErrorKind::kFormat, ctx + ": bad entry name");
    std::string name = ReadString(in, name_len, ctx);
    const int kind = in.get();
    if (kind == 0) {
      RawTensor tensor = ReadMelt(in, ctx + ":" + name);
      table.entries_.push_back({std::move(name), std::move(tensor)});
    } else if (kind == 1) {
      const auto len = ReadU32(in, ctx);
      if (len > kMaxTextLength) throw Error(ErrorKind::kFormat, ctx + ": bad text entry");
      std::string text = ReadString(in, len, ctx);
      table.entries_.push_back({std::move(name), std::move(text)});
    } else {
      throw Error(ErrorKind::kFormat, ctx + ": unknown entry kind for '" + name + "'");
    }
  }
  return table;
}

}  // namespace audiotext::io
