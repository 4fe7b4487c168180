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

#ifndef AUDIOTEXT_IO_NAMED_TABLE_H_
#define AUDIOTEXT_IO_NAMED_TABLE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "audiotext/io/melt.h"

namespace audiotext::io {

// Ordered name -> (tensor | text) table, used as the checkpoint container.
//
// On disk:
//   'M' 'C' 'K' 'P', u32 version, u32 entry count, then per entry
//   u32 name length, name bytes, u8 kind (0 = MELT tensor, 1 = text),
//   followed by a MELT block or u32 length + text bytes.
//
// Entry order is preserved so that identical tables serialize to identical
// bytes.
class NamedTable {
 public:
  using Value = std::variant<RawTensor, std::string>;

  struct Entry {
    std::string name;
    Value value;
  };

  void PutTensor(std::string name, RawTensor tensor);
  void PutText(std::string name, std::string text);

  const RawTensor* FindTensor(std::string_view name) const;
  std::optional<std::string> FindText(std::string_view name) const;
  bool Contains(std::string_view name) const;

  // Removes every entry whose name starts with `prefix`; returns the count.
  std::size_t RemovePrefix(std::string_view prefix);
  std::size_t CountPrefix(std::string_view prefix) const;

  const std::vector<Entry>& entries() const { return entries_; }

  void Save(const std::filesystem::path& path) const;
  static NamedTable Load(const std::filesystem::path& path);

 private:
  Entry* FindEntry(std::string_view name);
  const Entry* FindEntry(std::string_view name) const;

  std::vector<Entry> entries_;
};

}  // namespace audiotext::io

#endif  // AUDIOTEXT_IO_NAMED_TABLE_H_
